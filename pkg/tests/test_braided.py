import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.cyclo import make_field
from algebra.exactla import MonomialOperator
from braided.braiding import (
    BraidingError,
    MonomialBraiding,
    TwistPair,
    ZeroCoefficientError,
    braid_violation,
    check_braid_equation,
    cocycle_check,
    diagonal_braiding,
    flip_braiding,
    restrict,
    scalar_braiding,
    twist_conjugate,
)
from braided.diagonal import diagonal_profile, dynkin_type
from braided.solutions import (
    DegenerateSolutionError,
    Rack,
    RackError,
    SetSolution,
    conjugate_by_T,
    derived_rack,
    dihedral_rack,
    flip_solution,
    is_homomorphism,
    is_rack_type,
    rack_isomorphic,
    rack_to_solution,
    residue_labels,
    solution_checks,
    trivial_rack,
    ybe_violation,
)
from utils.literals import parse_literal

F3 = make_field(3)


def rack_braiding(rack: Rack, field=F3) -> MonomialBraiding:
    sol = rack_to_solution(rack)
    one = field.one()
    return MonomialBraiding(rack.size, field, sol, tuple((one,) * rack.size for _ in range(rack.size)))


class TestSetSolutions:
    def test_flip_flags(self):
        flags = solution_checks(flip_solution(3))
        assert flags.ybe and flags.nondegenerate and flags.involutive

    def test_rack_solution_not_involutive(self):
        flags = solution_checks(rack_to_solution(dihedral_rack(3)))
        assert flags.ybe and flags.nondegenerate
        assert not flags.involutive

    def test_non_commuting_permutations_break_ybe(self):
        f, g = [1, 0, 2], [0, 2, 1]
        sol = SetSolution.from_map(3, lambda i, j: (f[j], g[i]))
        assert ybe_violation(sol) == (0, 0, 0)

    def test_table_validation(self):
        with pytest.raises(ValueError):
            SetSolution(2, ((0, 1), (1, 0)), ((0, 2), (1, 0)))

    def test_transport_inverts_conjugation(self):
        sol = rack_to_solution(dihedral_rack(5))
        f = (2, 4, 1, 0, 3)
        assert sol.conjugate_by(f).transport(f) == sol


class TestRacks:
    @pytest.mark.parametrize("n", range(1, 10))
    def test_dihedral_is_quandle(self, n):
        rack = dihedral_rack(n)
        assert rack.is_valid()
        assert rack.is_quandle()

    def test_invalid_table(self):
        with pytest.raises(RackError):
            Rack(2, ((0, 0), (1, 1))).check()
        with pytest.raises(RackError):
            Rack(2, ((0, 1),))

    def test_derived_rack_of_rack_solution(self):
        rack = dihedral_rack(5)
        assert derived_rack(rack_to_solution(rack)) == rack

    def test_derived_rack_of_flip_is_trivial(self):
        assert derived_rack(flip_solution(4)) == trivial_rack(4)

    def test_degenerate_solution(self):
        sol = SetSolution.from_map(2, lambda i, j: (0, 0))
        with pytest.raises(DegenerateSolutionError):
            derived_rack(sol)

    def test_conjugate_by_T_gives_rack_type(self):
        f, g = [1, 2, 0], [2, 0, 1]
        sol = SetSolution.from_map(3, lambda i, j: (f[j], g[i]))
        out = conjugate_by_T(sol)
        assert is_rack_type(out)
        assert ybe_violation(out) is None

    def test_residue_labels(self):
        assert residue_labels(5) == (1, 2, 3, 4, 0)
        assert residue_labels(4, 2) == (1, 0, 1, 0)

    def test_not_isomorphic(self):
        assert rack_isomorphic(dihedral_rack(4), trivial_rack(4)) is None

    def test_explicit_map(self):
        rack = dihedral_rack(5)
        assert rack_isomorphic(rack, rack, f=range(5)) == (0, 1, 2, 3, 4)
        assert rack_isomorphic(rack, rack, f=(1, 0, 2, 3, 4)) is None

    def test_size_mismatch(self):
        with pytest.raises(RackError):
            rack_isomorphic(dihedral_rack(3), dihedral_rack(4))

    def test_search_limit(self):
        with pytest.raises(RackError):
            rack_isomorphic(dihedral_rack(9), dihedral_rack(9), limit=8)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.permutations(list(range(n)))))
def test_relabelled_dihedral_is_found_isomorphic(perm):
    a = dihedral_rack(len(perm))
    n = a.size
    op = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            op[perm[i]][perm[j]] = perm[a(i, j)]
    b = Rack(n, tuple(map(tuple, op)))
    assert b.is_valid()
    f = rack_isomorphic(a, b)
    assert f is not None
    assert is_homomorphism(a, b, f)


class TestBraidings:
    def test_flip_is_braided(self):
        assert check_braid_equation(flip_braiding(3))

    def test_diagonal_always_braided(self):
        z = F3.gen()
        c = diagonal_braiding([[z, F3.one()], [z * z, -z]])
        assert braid_violation(c) is None
        assert cocycle_check(c.solution, c.R)

    def test_corrupted_braiding(self, corrupted_braiding):
        assert braid_violation(corrupted_braiding) == (0, 0, 0)

    def test_rack_coefficients(self):
        c = rack_braiding(dihedral_rack(3))
        assert check_braid_equation(c)
        assert cocycle_check(c.solution, c.R)

    def test_zero_coefficient(self):
        with pytest.raises(ZeroCoefficientError):
            diagonal_braiding([[F3.one(), F3.zero()], [F3.one(), F3.one()]])

    def test_scalar_braiding(self):
        c = scalar_braiding(-F3.gen())
        assert c.dim == 1
        assert c(0, 0) == (-F3.gen(), 0, 0)

    def test_operator_round_trip(self):
        c = rack_braiding(dihedral_rack(4))
        assert MonomialBraiding.from_operator(c.as_operator(), 4) == c

    def test_embed(self):
        c = diagonal_braiding([[F3.gen()]])
        big = c.embed(make_field(6))
        assert big.R[0][0] == make_field(6).power(2)


class TestRestrict:
    def test_closed_subset(self):
        c = flip_braiding(3)
        sub = restrict(c, (0, 2))
        assert sub == flip_braiding(2)

    def test_not_closed(self):
        c = rack_braiding(dihedral_rack(3))
        with pytest.raises(BraidingError):
            restrict(c, (0, 1))

    def test_repeated_index(self):
        with pytest.raises(BraidingError):
            restrict(flip_braiding(3), (1, 1))


class TestTwists:
    def test_identity_twist(self):
        c = rack_braiding(dihedral_rack(3))
        ident = MonomialOperator.identity(3, F3)
        result = twist_conjugate(c, TwistPair(ident, ident))
        assert result.equal
        assert result.braided
        assert result.tilde == c

    def test_swap_twist_diagonalizes(self):
        # V_{g,b,g}: v1v1 -> g v2v2, v1v2 -> b v1v2, v2v1 -> b v2v1, v2v2 -> g v1v1
        z = F3.gen()
        g, b = z, -F3.one()
        table = {(0, 0): (g, 1, 1), (0, 1): (b, 0, 1), (1, 0): (b, 1, 0), (1, 1): (g, 0, 0)}
        c = MonomialBraiding.from_rule(2, F3, lambda i, j: table[i, j])
        swap = MonomialOperator.permutation([1, 0], F3)
        result = twist_conjugate(c, TwistPair(swap, MonomialOperator.identity(2, F3)))
        assert result.equal
        profile = diagonal_profile(result.tilde)
        assert profile is not None
        assert profile.q == ((b, g), (g, b))

    def test_non_invertible_twist(self):
        c = flip_braiding(2, F3)
        bad = MonomialOperator([0, 0], [F3.one(), F3.one()], F3)
        with pytest.raises(ValueError):
            twist_conjugate(c, TwistPair(bad, MonomialOperator.identity(2, F3)))


class TestDynkin:
    def test_profile_of_non_diagonal(self):
        assert diagonal_profile(rack_braiding(dihedral_rack(3))) is None

    @pytest.mark.parametrize("data,name,dimension", [
        (("z3", "z3^2", "z3"), "A2", 27),
        (("-1", "1", "-1"), "A1xA1", 4),
        (("-1", "z3", "-1"), "superA2", 12),
        (("z3",), "A1", 3),
    ])
    def test_listed_types(self, data, name, dimension):
        values = tuple(parse_literal(x, F3) for x in data)
        ct = dynkin_type(values)
        assert (ct.name, ct.dimension) == (name, dimension)

    def test_unlisted(self):
        one = F3.one()
        assert dynkin_type((one,)) is None
        assert dynkin_type((F3.gen(), F3.gen(), one)) is None
