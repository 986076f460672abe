import json
from datetime import datetime, timezone

import pytest

from algebra.cyclo import make_field
from braided.braiding import flip_braiding
from families.cases import ParameterError
from families.k_family import all_k_params
from services import job_service, verify_service
from services.job_service import EXIT_BUDGET, EXIT_OK, JobSpec
from utils.literals import ParseError

VABE_4 = {"a": "1", "b": "-1", "e": "1"}


class TestJobSpec:
    def test_dims_needs_cap_two(self):
        with pytest.raises(ParseError):
            JobSpec(command="dims", family="Vabe", params=VABE_4, cap=1)

    def test_classify_accepts_cap_one(self):
        assert JobSpec(command="classify", family="K", cap=1).cap == 1


class TestResolveInput:
    def test_family_flags(self):
        doc, tag = job_service.resolve_input(JobSpec(command="dims", family="Vabe", params=VABE_4))
        assert tag == "Vabe"
        assert doc == {"family": "Vabe", "params": VABE_4}

    def test_descriptor_file(self, tmp_path):
        path = tmp_path / "vabe.json"
        path.write_text(json.dumps({"family": "Vabe", "params": VABE_4}), encoding="utf-8")
        doc, tag = job_service.resolve_input(JobSpec(command="dims", file=str(path)))
        assert tag == "Vabe"
        assert doc["params"] == VABE_4

    def test_braiding_file(self, corrupted_file):
        doc, tag = job_service.resolve_input(JobSpec(command="dims", file=str(corrupted_file)))
        assert tag is None
        assert doc["dim"] == 3

    def test_no_input(self):
        with pytest.raises(ParseError):
            job_service.resolve_input(JobSpec(command="dims"))

    def test_classify_needs_descriptor(self, corrupted_file):
        with pytest.raises(ParseError):
            job_service.run_classify(JobSpec(command="classify", file=str(corrupted_file)))


class TestRunDims:
    def test_cache_round_trip(self, tmp_path):
        spec = JobSpec(command="dims", family="Vabe", params=VABE_4, cap=4, cache_dir=str(tmp_path))
        first = job_service.run_dims(spec, verbose=False)
        assert first.exit_code == EXIT_OK
        assert not first.cache_hit
        assert first.report["dims"] == [1, 2, 1, 0]
        assert first.report["input"] == {"family": "Vabe", "params": VABE_4}

        second = job_service.run_dims(spec, verbose=False)
        assert second.cache_hit
        assert second.text == first.text
        assert second.input_key == first.input_key

    def test_no_cache(self, tmp_path):
        spec = JobSpec(command="dims", family="Vabe", params=VABE_4, cap=4,
                       cache_dir=str(tmp_path), use_cache=False)
        job_service.run_dims(spec, verbose=False)
        assert list(tmp_path.iterdir()) == []

    def test_budget_exceeded_is_not_cached(self, tmp_path):
        spec = JobSpec(command="dims", family="Vabe", params=VABE_4, cap=4,
                       budget_secs=-1, cache_dir=str(tmp_path))
        result = job_service.run_dims(spec, verbose=False)
        assert result.exit_code == EXIT_BUDGET
        assert result.report["budget_exceeded"] is True
        assert result.report["verdict"] == "undetermined"
        assert list(tmp_path.iterdir()) == []


class TestRunLog:
    def test_record_and_list(self, tmp_path, monkeypatch):
        monkeypatch.setattr(job_service, "NICHOLS_RUN_LOG", True)
        db_path = str(tmp_path / "runs.sqlite")
        run_id = job_service.record_run("classify", datetime.now(timezone.utc), EXIT_OK,
                                        family="K", verdict="finite", total=64, db_path=db_path)
        assert run_id == 1
        rows = job_service.recent_runs(db_path=db_path)
        assert len(rows) == 1
        assert rows[0]["command"] == "classify"
        assert rows[0]["total"] == 64
        assert rows[0]["cache_hit"] == 0

    def test_disabled(self, no_run_log, tmp_path):
        db_path = tmp_path / "runs.sqlite"
        assert job_service.record_run("dims", datetime.now(timezone.utc), EXIT_OK,
                                      db_path=str(db_path)) is None
        assert not db_path.exists()


class TestSweeps:
    def test_all_needs_N(self):
        with pytest.raises(ParameterError):
            verify_service.parameter_sweep(all_k_params, 2, None, "all")

    def test_unknown_sweep(self):
        with pytest.raises(ParameterError):
            verify_service.parameter_sweep(all_k_params, 2, 1, "some")

    def test_sample_is_seeded(self):
        a = verify_service.parameter_sweep(all_k_params, 2, None, "sample", samples=20)
        b = verify_service.parameter_sweep(all_k_params, 2, None, "sample", samples=20)
        assert len(a) == 20
        assert a == b
        assert all(1 <= P.N <= 3 for P in a)

    def test_fixed_N_sample(self):
        params = verify_service.parameter_sweep(all_k_params, 1, 2, "sample", samples=5)
        assert {P.N for P in params} == {2}


class TestVerify:
    def test_k_lemmas(self):
        report = verify_service.verify_k_lemmas(2, 1, "all")
        assert report.passed
        assert report.cases == 16

    def test_k_lemmas_sampled(self):
        report = verify_service.verify_k_lemmas(3, sweep="sample", samples=20)
        assert report.passed
        assert report.cases == 20

    def test_n_lemmas(self):
        report = verify_service.verify_n_lemmas(1, sweep="sample", samples=20)
        assert report.passed
        assert report.as_dict()["details"]["n"] == 1

    def test_l_rack(self):
        report = verify_service.verify_l_rack(5)
        assert report.passed
        assert report.cases == 121
        assert report.details["f"] == [1, 10, 3, 8, 5, 6, 7, 4, 9, 2, 11]

    def test_i_rack(self):
        report = verify_service.verify_i_rack(4)
        assert report.passed
        assert report.details["modulus"] == 8

    def test_braid_failure_names_triple(self, corrupted_braiding):
        report = verify_service.verify_braid(corrupted_braiding)
        assert not report.passed
        assert report.first_counterexample == {"triple": [1, 1, 1]}
        assert report.as_dict()["failures"] == 1

    def test_cocycle_on_flip(self):
        assert verify_service.verify_cocycle(flip_braiding(3)).passed

    def test_family_cocycles(self):
        assert verify_service.verify_family_cocycles("K", 2, 1, "all").passed
        assert verify_service.verify_family_cocycles("N", 1, 1, "all").passed

    def test_family_cocycles_unknown_family(self):
        with pytest.raises(ParameterError):
            verify_service.verify_family_cocycles("L", 2, 1, "all")

    def test_first_difference(self):
        c = flip_braiding(2, make_field(3))
        assert verify_service.first_difference(c, c) is None
        changed = c.with_coefficient(0, 1, make_field(3).gen())
        diff = verify_service.first_difference(c, changed)
        assert diff["pair"] == [1, 2]
        assert diff["expected"]["coeff"] == "1"
        assert diff["got"]["coeff"] == "z3"
