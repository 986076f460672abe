import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.cyclo import make_field
from algebra.exactla import accumulate, compose, dense_rank, rank
from braided.braiding import diagonal_braiding, flip_braiding, twist_conjugate
from families.k_family import all_k_params, k_braiding, k_twist
from families.n_family import all_n_params, n_braiding
from families.vabe import VAbeParams, v_abe
from nichols.hilbert import (
    cartan_series,
    hilbert_polynomial,
    quantum_integer,
    series_product,
)
from nichols.scan import (
    Budget,
    BudgetExceeded,
    braid_orbits,
    finiteness_scan,
    graded_dims,
    orbit_labels,
)
from nichols.symmetrizer import c_i, symmetrizer, symmetrizer_terms
from utils.literals import parse_literal


def vabe(a: str, b: str, e: str):
    return v_abe(VAbeParams(parse_literal(a), parse_literal(b), parse_literal(e)))


class TestSymmetrizer:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_recursion_matches_permutation_sum(self, n):
        c = vabe("1", "z3", "1")
        assert symmetrizer(c, n) == accumulate(symmetrizer_terms(c, n))

    def test_term_count(self):
        assert len(symmetrizer_terms(flip_braiding(2), 3)) == 6

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_flip_gives_symmetric_algebra(self, n):
        assert rank(symmetrizer(flip_braiding(2), n)) == n + 1

    def test_zero_rank_persists_past_top(self):
        c = vabe("1", "-1", "1")
        assert rank(symmetrizer(c, 3)) == 0
        assert rank(symmetrizer(c, 4)) == 0

    @pytest.mark.parametrize("n", [4, 5])
    def test_distant_partial_braidings_commute(self, n):
        c = vabe("z3^2", "z3", "1")
        for i in range(1, n):
            for j in range(i + 2, n):
                ci, cj = c_i(c, n, i), c_i(c, n, j)
                assert compose(ci, cj) == compose(cj, ci)

    def test_distant_partial_braidings_commute_k_family(self, k64):
        c = k_braiding(k64)
        ci, cj = c_i(c, 4, 1), c_i(c, 4, 3)
        assert compose(ci, cj) == compose(cj, ci)

    def test_partial_braiding_range(self):
        with pytest.raises(ValueError):
            c_i(flip_braiding(2), 3, 3)

    def test_partial_braiding_slot(self):
        # c_2 on V^(x)3 moves the last two slots of w1 w1 w2 (indices base 2)
        op = c_i(flip_braiding(2), 3, 2)
        assert op.image[0b001] == 0b010


class TestOrbits:
    def test_flip_orbits_are_multisets(self):
        labels = braid_orbits(flip_braiding(2), 3)
        assert len(np.unique(labels)) == 4
        labels = braid_orbits(flip_braiding(3), 2)
        assert len(np.unique(labels)) == 6

    def test_orbit_labels_are_minimal(self):
        cycle = np.array([1, 2, 0, 3])
        assert orbit_labels([cycle], 4).tolist() == [0, 0, 0, 3]


class TestGradedDims:
    def test_m_squared_branch(self):
        dims = graded_dims(vabe("1", "-1", "1"), 8)
        assert dims.dims == (1, 2, 1, 0)
        assert dims.finite
        assert dims.total == 4
        assert dims.top_degree == 2

    def test_order_three_m_squared(self):
        dims = graded_dims(vabe("1", "z3", "1"), 8)
        assert dims.dims == (1, 2, 3, 2, 1, 0)
        assert dims.total == 9
        assert dims.top_degree == 4

    def test_fifth_roots(self):
        dims = graded_dims(vabe("1", "z5", "1"), 9)
        assert dims.dims == (1, 2, 3, 4, 5, 4, 3, 2, 1, 0)
        assert dims.total == 25

    @pytest.mark.parametrize("m", [2, 3, 4, 5])
    def test_diagonal_type_a1_a1(self, m):
        # q11 = q22 = q in G_m and q12 * q21 = 1
        field = make_field(m)
        q = field.gen()
        c = diagonal_braiding([[q, q], [field.power(m - 1), q]])
        expected = series_product(quantum_integer(1, m), quantum_integer(1, m))
        assert expected == cartan_series("A1xA1", m)
        assert graded_dims(c, 2 * m - 1).dims == tuple(expected) + (0,)

    def test_flip_prefix(self):
        dims = graded_dims(flip_braiding(2), 3)
        assert dims.dims == (1, 2, 3, 4)
        assert not dims.finite
        assert dims.total is None
        assert dims.verdict == "undetermined"

    def test_cap_validation(self):
        with pytest.raises(ValueError):
            graded_dims(flip_braiding(2), 0)
        with pytest.raises(ValueError):
            finiteness_scan(flip_braiding(2), 1)

    def test_twist_equivalent_dims(self, k64):
        c = k_braiding(k64)
        tilde = twist_conjugate(c, k_twist(k64)).tilde
        expected = (1, 4, 8, 12, 14, 12)
        assert graded_dims(c, 5).dims == expected
        assert graded_dims(tilde, 5).dims == expected


def assert_dims_are_ranks(c, top):
    dims = graded_dims(c, top).dims
    for n in range(1, top + 1):
        S = symmetrizer(c, n)
        expected = dims[n] if n < len(dims) else 0
        assert rank(S) == expected, f"degree {n}"
        if c.dim ** n <= 64:
            assert dense_rank(S.to_dense()) == expected, f"degree {n} (dense)"


F12 = make_field(12)


class TestScanMatchesSymmetrizer:
    @pytest.mark.parametrize("P", list(all_k_params(1, 1))[::3], ids=str)
    def test_k_family(self, P):
        assert_dims_are_ranks(k_braiding(P), 4)

    @pytest.mark.parametrize("P", list(all_n_params(1, 1))[::4], ids=str)
    def test_n_family(self, P):
        assert_dims_are_ranks(n_braiding(P), 3)

    @settings(max_examples=25, deadline=None)
    @given(st.lists(st.integers(0, 11), min_size=4, max_size=4))
    def test_diagonal(self, exponents):
        a, b, c, d = (F12.power(k) for k in exponents)
        assert_dims_are_ranks(diagonal_braiding([[a, b], [c, d]]), 4)


class TestScan:
    def test_report(self):
        report = finiteness_scan(vabe("1", "-1", "1"), 8).as_dict()
        assert report["dims"] == [1, 2, 1, 0]
        assert report["total"] == 4
        assert report["top_degree"] == 2
        assert report["verdict"] == "finite"
        assert report["hilbert"] == "1 + 2t + t^2"
        assert report["budget_exceeded"] is False
        assert [s["degree"] for s in report["stats"]] == [2, 3]

    def test_memory_budget(self):
        report = finiteness_scan(vabe("1", "-1", "1"), 4, Budget(max_nonzeros=0))
        assert report.budget_exceeded
        assert "memory" in report.reason
        assert report.dims.dims == (1, 2)
        assert report.dims.verdict == "undetermined"

    def test_budget_checked_while_candidates_are_rejected(self, monkeypatch):
        # exterior algebra on 16 generators: 256 candidates in degree 2, only 120 accepted
        minus = make_field(2).power(1)
        c = diagonal_braiding([[minus] * 16 for _ in range(16)])
        budget = Budget()
        calls = []
        monkeypatch.setattr(budget, "check", lambda nonzeros, dims, stats: calls.append(list(dims)))
        assert graded_dims(c, 2, budget).dims == (1, 16, 120)
        assert calls == [[1, 16], [1, 16]]

    def test_budget_raises_in_graded_dims(self):
        with pytest.raises(BudgetExceeded):
            graded_dims(vabe("1", "-1", "1"), 4, Budget(max_nonzeros=0))


class TestHilbert:
    def test_quantum_integer(self):
        assert quantum_integer(2, 3) == [1, 0, 1, 0, 1]

    def test_cartan_series(self):
        assert cartan_series("A2", 3) == [1, 2, 4, 4, 5, 4, 4, 2, 1]
        assert cartan_series("A2", 2) == [1, 2, 2, 2, 1]
        assert cartan_series("superA2", 3) == [1, 2, 2, 2, 2, 2, 1]
        assert cartan_series("A1xA1", 2) == [1, 2, 1]

    def test_product_of_two_a2(self):
        a2 = cartan_series("A2", 2)
        assert series_product(a2, a2) == [1, 4, 8, 12, 14, 12, 8, 4, 1]
        assert series_product(a2, a2, cap=4) == [1, 4, 8, 12, 14]
        assert sum(series_product(a2, a2)) == 64

    def test_unknown_type(self):
        with pytest.raises(ValueError):
            cartan_series("G2", 3)

    def test_polynomial(self):
        assert hilbert_polynomial([1, 2, 1]) == "1 + 2t + t^2"
        assert hilbert_polynomial([1, 0, 3]) == "1 + 3t^2"


@pytest.mark.slow
class TestAcceptanceScans:
    def test_cartan_a2(self):
        dims = graded_dims(vabe("z3^2", "z3", "1"), 9)
        assert dims.dims == (1, 2, 4, 4, 5, 4, 4, 2, 1, 0)
        assert list(dims.dims[:-1]) == cartan_series("A2", 3)
        assert dims.total == 27

    def test_super_a2(self):
        dims = graded_dims(vabe("z3", "-1", "1"), 8)
        assert dims.dims == (1, 2, 2, 2, 2, 2, 1, 0)
        assert dims.total == 12

    @pytest.mark.parametrize("a,b,e", [("z3^2", "z3", "1"), ("z3", "-1", "1")])
    def test_zero_rank_persists(self, a, b, e):
        c = vabe(a, b, e)
        first_zero = len(graded_dims(c, 9).dims) - 1
        assert rank(symmetrizer(c, first_zero)) == 0
        assert rank(symmetrizer(c, first_zero + 1)) == 0

    def test_infinite_witness(self):
        dims = graded_dims(vabe("z3", "z3", "1"), 8)
        assert len(dims.dims) == 9
        assert all(d > 0 for d in dims.dims)
        assert not dims.finite

    def test_k_family_64(self, k64):
        dims = graded_dims(k_braiding(k64), 9)
        assert dims.dims == (1, 4, 8, 12, 14, 12, 8, 4, 1, 0)
        assert dims.total == 64
