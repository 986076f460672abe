import pytest

from braided.braiding import braid_violation, cocycle_check, twist_conjugate
from braided.diagonal import dynkin_type
from families.cases import Case, CaseTable, ParameterError, TotalityError
from families.i_family import i_family, i_relabel, i_table, i_verdict
from families.k_family import (
    KParams,
    all_k_params,
    k_braiding,
    k_closed_form,
    k_profile,
    k_rack_shape,
    k_twist,
    k_verdict,
)
from families.l_family import l_family, l_relabel, l_table, l_verdict
from families.n_family import NParams, all_n_params, n_braiding, n_closed_form, n_rack_shape, n_twist, n_verdict
from families.registry import FAMILIES, UnknownFamilyError, build_braiding, build_params, classify
from families.vabe import VAbeParams, v_abe, v_abe_diagonalize, v_abe_profile, v_abe_verdict
from nichols.scan import finiteness_scan
from utils.literals import parse_literal


def vabe_params(a: str, b: str, e: str) -> VAbeParams:
    return VAbeParams(parse_literal(a), parse_literal(b), parse_literal(e))


class TestCaseTable:
    def test_exactly_one_case(self):
        table = CaseTable("t", [
            Case("low", lambda a, b: a <= 1, lambda a, b: "low"),
            Case("high", lambda a, b: a >= 1, lambda a, b: "high"),
        ])
        assert table.evaluate(2, 1) == "high"
        with pytest.raises(TotalityError) as err:
            table.evaluate(1, 1)
        assert err.value.matched == ["low", "high"]
        assert err.value.pair == (1, 1)

    def test_uncovered_pair(self):
        table = CaseTable("t", [Case("diag", lambda a, b: a == b, lambda a, b: (a, b))])
        with pytest.raises(TotalityError) as err:
            table.check_totality(2)
        assert err.value.pair == (1, 2)
        assert "not covered" in str(err.value)


class TestVAbe:
    @pytest.mark.parametrize("a,b,e,total,type_name", [
        ("1", "-1", "1", 4, "A1xA1"),
        ("1", "z3", "1", 9, "A1xA1"),
        ("z3^2", "z3", "1", 27, "A2"),
        ("z3", "-1", "1", 12, "superA2"),
        ("z5", "-1", "1", 20, "superA2"),
        ("1", "z5", "1", 25, "A1xA1"),
    ])
    def test_finite_branches(self, a, b, e, total, type_name):
        verdict = v_abe_verdict(vabe_params(a, b, e))
        assert verdict.finite
        assert verdict.total == total
        assert verdict.type_name == type_name

    def test_infinite_witness(self):
        verdict = v_abe_verdict(vabe_params("z3", "z3", "1"))
        assert verdict.verdict == "infinite"
        assert verdict.total is None

    def test_braided(self):
        c = v_abe(vabe_params("z3", "z5", "-1"))
        assert braid_violation(c) is None
        assert cocycle_check(c.solution, c.R)

    def test_diagonal_form(self):
        P = vabe_params("z3^2", "z3", "1")
        form = v_abe_diagonalize(P)
        assert form.sqrt_ae * form.sqrt_ae == (P.a * P.e).embed(form.sqrt_ae.field)
        profile = v_abe_profile(P)
        field = profile.q[0][0].field
        b, ae = P.b.embed(field), (P.a * P.e).embed(field)
        assert profile.dynkin() == (b, ae, b)
        assert dynkin_type(profile.dynkin()).name == "A2"

    def test_zero_parameter(self):
        with pytest.raises(ParameterError):
            vabe_params("0", "1", "1")


class TestKFamily:
    def test_parameter_ranges(self):
        with pytest.raises(ParameterError):
            KParams(N=1, n=2, j=1, k=0, p=0, s=1)
        with pytest.raises(ParameterError):
            KParams(N=2, n=2, j=2, k=2, p=0, s=1)
        KParams(N=1, n=2, j=1, k=0, p=0, s=1, lam=-1)

    def test_enumeration(self):
        params = list(all_k_params(2, 1))
        assert len(params) == 2 * 2 * 2 * 2 * 2 * 2
        assert len(set(params)) == len(params)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_closed_forms_match_conjugation(self, n):
        for P in all_k_params(1, n):
            result = twist_conjugate(k_braiding(P), k_twist(P))
            assert result.equal, P
            assert k_closed_form(P, "bar") == result.bar, P
            assert k_closed_form(P, "tilde") == result.tilde, P
            assert k_rack_shape(P, result.bar), P

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_braid_and_cocycle(self, n):
        for P in all_k_params(1, n):
            c = k_braiding(P)
            assert braid_violation(c) is None, P
            assert cocycle_check(c.solution, c.R), P

    def test_n2_bar_entries(self, k64):
        P = k64
        bar = k_closed_form(P, "bar")
        m, q, J = P.m, P.q, P.J
        expected = {
            (1, 1): ((1, 1), q),
            (1, 2): ((4, 1), m * q * J.inverse()),
            (1, 3): ((3, 1), q),
            (2, 4): ((4, 2), J ** 4 * q),
            (4, 1): ((3, 4), q * (J ** 5 * m).inverse()),
            (4, 4): ((4, 4), q),
        }
        for (a, b), ((x, y), value) in expected.items():
            coeff, si, tj = bar(a - 1, b - 1)
            assert (si + 1, tj + 1) == (x, y), (a, b)
            assert coeff == value.to_cyclo(), (a, b)

    def test_bad_variant(self, k64):
        with pytest.raises(ValueError):
            k_closed_form(k64, "hat")

    def test_profile_n1(self):
        P = KParams(N=1, n=1, j=1, k=0, p=1, s=1, lam=-1)
        q = P.q.to_cyclo()
        (profile,) = k_profile(P)
        assert profile.dynkin() == (q, -(q * q), q)

    def test_profile_n2(self, k64):
        q = k64.q.to_cyclo()
        profiles = k_profile(k64)
        assert len(profiles) == 2
        for profile in profiles:
            assert profile is not None
            assert profile.dynkin() == (q, q * q, q)
        assert k_profile(KParams(N=1, n=3, j=2, k=0, p=1, s=1)) == []

    def test_verdicts(self, k64):
        v = k_verdict(k64)
        assert (v.verdict, v.total, v.type_name) == ("finite", 64, "A2xA2")
        v = k_verdict(KParams(N=1, n=1, j=2, k=0, p=1, s=1))
        assert (v.verdict, v.total, v.type_name) == ("finite", 4, "A1xA1")
        v = k_verdict(KParams(N=3, n=1, j=2, k=1, p=0, s=1))
        assert (v.verdict, v.total, v.type_name) == ("finite", 27, "A2")
        assert k_verdict(KParams(N=1, n=2, j=2, k=0, p=0, s=1)).verdict == "infinite"
        assert k_verdict(KParams(N=1, n=3, j=2, k=0, p=1, s=1)).verdict == "infinite"

    def test_verdict_sweep_is_consistent(self):
        # every tuple for N = 3, n = 1: finite exactly when a finite branch holds
        params = list(all_k_params(3, 1))
        assert len(params) >= 100
        for P in params:
            q = P.q.to_cyclo()
            branch = not q.is_one() and ((q * q * P.lam).is_one() or (q * q * q * P.lam).is_one())
            v = k_verdict(P)
            assert v.finite == branch, P
            if v.finite:
                assert v.total == dynkin_type(k_profile(P)[0].dynkin()).dimension

    def test_verdict_agrees_with_scan(self):
        for P in all_k_params(1, 1):
            v = k_verdict(P)
            scan = finiteness_scan(k_braiding(P), 9).dims
            if v.finite:
                assert scan.finite and scan.total == v.total, P
            else:
                assert not scan.finite, P


class TestNFamily:
    def test_parameter_ranges(self):
        with pytest.raises(ParameterError):
            NParams(N=1, n=1, k=0, p=0, q=2, s=1)
        with pytest.raises(ParameterError):
            NParams(N=1, n=0, k=0, p=0, q=0, s=1)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_closed_forms_match_conjugation(self, n):
        for P in all_n_params(1, n):
            result = twist_conjugate(n_braiding(P), n_twist(P))
            assert result.equal, P
            assert n_closed_form(P, "tilde") == result.tilde, P
            assert n_closed_form(P, "bar") == result.bar, P
            assert n_rack_shape(P, result.tilde), P

    @pytest.mark.parametrize("n", [1, 2])
    def test_braid_and_cocycle(self, n):
        for P in all_n_params(1, n):
            c = n_braiding(P)
            assert braid_violation(c) is None, P
            assert cocycle_check(c.solution, c.R), P

    def test_verdict_is_open(self):
        v = n_verdict(NParams(N=1, n=2, k=0, p=0, q=0, s=1))
        assert v.verdict == "open"
        assert "D_5" in v.rule


class TestLFamily:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_dihedral(self, n):
        family = l_family(n)
        l_table(n).check_totality(2 * n + 1)
        assert family.congruence_failures() == []
        assert family.is_dihedral()

    def test_relabel(self):
        # f(a) = a for odd a, 2n+2-a for even a (1-based)
        assert [v + 1 for v in l_relabel(2)] == [1, 4, 3, 2, 5]

    def test_literal_guard_is_not_total(self):
        with pytest.raises(TotalityError):
            l_family(2, literal=True)

    def test_range(self):
        with pytest.raises(ParameterError):
            l_family(0)

    def test_verdict(self):
        assert l_verdict(3).verdict == "open"


class TestIFamily:
    @pytest.mark.parametrize("n", range(2, 7))
    def test_dihedral(self, n):
        family = i_family(n)
        i_table(n).check_totality(2 * n)
        assert family.congruence_failures() == []
        assert family.is_dihedral()

    def test_relabel(self):
        assert [v + 1 for v in i_relabel(3)] == [1, 5, 3, 4, 2, 6]

    def test_range(self):
        with pytest.raises(ParameterError):
            i_family(1)

    def test_verdicts(self):
        v = i_verdict(4)
        assert v.verdict == "infinite"
        assert v.rule == "D_2n rack, n>2"
        assert i_verdict(2).verdict == "open"


class TestRegistry:
    def test_tags(self):
        assert set(FAMILIES) == {"Vabe", "K", "N", "L", "I"}

    def test_classify_k(self):
        v = classify("K", {"N": 1, "n": 2, "j": 2, "k": 0, "p": 1, "s": 1})
        assert v.as_dict()["total"] == 64
        assert v.as_dict()["verdict"] == "finite"

    def test_classify_i(self):
        assert classify("I", {"n": 4}).as_dict() == {
            "family": "I",
            "params": {"n": 4},
            "verdict": "infinite",
            "rule": "D_2n rack, n>2",
        }

    def test_classify_n(self):
        v = classify("N", {"N": 1, "n": 2, "k": 0, "p": 0, "q": 0, "s": 1})
        assert v.verdict == "open"

    def test_classify_vabe_from_strings(self):
        v = classify("Vabe", {"a": "z3^2", "b": "z3", "e": "1"})
        assert v.total == 27

    def test_string_integers_accepted(self):
        P = build_params("K", {"N": "1", "n": "2", "j": "2", "k": "0", "p": "1", "s": "1"})
        assert P.as_dict()["mu"] == 1

    def test_unknown_family(self):
        with pytest.raises(UnknownFamilyError) as err:
            classify("X", {})
        assert "unknown family 'X'" in str(err.value)

    def test_missing_parameter(self):
        with pytest.raises(ParameterError):
            classify("K", {"N": 1, "n": 2})
        with pytest.raises(ParameterError):
            classify("Vabe", {"a": "1"})

    def test_set_solution_family_has_no_braiding(self):
        with pytest.raises(ParameterError):
            build_braiding("L", {"n": 2})
