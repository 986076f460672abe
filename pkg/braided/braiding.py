"""
Braided vector spaces of set-theoretical (monomial) type.

c(w_i (x) w_j) = R[i][j] * w_sigma_i(j) (x) w_tau_j(i), with 0-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence

from algebra.cyclo import CycloField, CycloNum, make_field
from algebra.exactla import (
    DimensionMismatchError,
    MonomialOperator,
    NotInvertibleError,
    compose,
    tensor,
)
from braided.solutions import SetSolution, flip_solution


class ZeroCoefficientError(ValueError):
    """A braiding coefficient R[i][j] is zero."""


class BraidingError(ValueError):
    """A table that does not describe a monomial braiding (or a subspace that is not closed)."""


Coeffs = tuple[tuple[CycloNum, ...], ...]


@dataclass(frozen=True)
class MonomialBraiding:
    dim: int
    field: CycloField
    solution: SetSolution
    R: Coeffs

    def __post_init__(self):
        if self.solution.size != self.dim:
            raise BraidingError(f"solution on {self.solution.size} points for a braiding of dim {self.dim}")
        if len(self.R) != self.dim or any(len(row) != self.dim for row in self.R):
            raise BraidingError(f"coefficient table must be {self.dim}x{self.dim}")
        for i, row in enumerate(self.R):
            for j, v in enumerate(row):
                if v.field.order != self.field.order:
                    raise BraidingError(f"R[{i}][{j}] lives in {v.field}, braiding is over {self.field}")
                if v.is_zero():
                    raise ZeroCoefficientError(f"R[{i}][{j}] is zero")

    @classmethod
    def from_rule(cls, dim: int, field: CycloField,
                  rule: Callable[[int, int], tuple[CycloNum, int, int]]) -> MonomialBraiding:
        """Build from rule(i, j) -> (coefficient, sigma_i(j), tau_j(i))."""
        sigma = [[0] * dim for _ in range(dim)]
        tau = [[0] * dim for _ in range(dim)]
        R = [[None] * dim for _ in range(dim)]
        for i in range(dim):
            for j in range(dim):
                coeff, si, tj = rule(i, j)
                if not isinstance(coeff, CycloNum):
                    coeff = field.from_rational(coeff) if isinstance(coeff, (int, Fraction)) else coeff.to_cyclo()
                R[i][j] = coeff
                sigma[i][j] = si
                tau[j][i] = tj
        solution = SetSolution(dim, tuple(map(tuple, sigma)), tuple(map(tuple, tau)))
        return cls(dim, field, solution, tuple(map(tuple, R)))

    @classmethod
    def from_operator(cls, op: MonomialOperator, dim: int) -> MonomialBraiding:
        if op.dim != dim * dim:
            raise DimensionMismatchError(f"operator of dim {op.dim} is not on a {dim}-dim space squared")

        def rule(i, j):
            idx = i * dim + j
            si, tj = divmod(op.image[idx], dim)
            return op.coeff[idx], si, tj

        return cls.from_rule(dim, op.field, rule)

    def __call__(self, i: int, j: int) -> tuple[CycloNum, int, int]:
        return self.R[i][j], self.solution.sigma[i][j], self.solution.tau[j][i]

    def entries(self) -> Iterator[tuple[int, int, int, int, CycloNum]]:
        for i in range(self.dim):
            for j in range(self.dim):
                coeff, si, tj = self(i, j)
                yield i, j, si, tj, coeff

    def as_operator(self) -> MonomialOperator:
        d = self.dim
        image = []
        coeff = []
        for i, j, si, tj, v in self.entries():
            image.append(si * d + tj)
            coeff.append(v)
        return MonomialOperator(image, coeff, self.field, check=False)

    def with_coefficient(self, i: int, j: int, value: CycloNum) -> MonomialBraiding:
        """Copy with R[i][j] replaced."""
        R = [list(row) for row in self.R]
        R[i][j] = value
        return MonomialBraiding(self.dim, self.field, self.solution, tuple(map(tuple, R)))

    def embed(self, target: CycloField) -> MonomialBraiding:
        R = tuple(tuple(v.embed(target) for v in row) for row in self.R)
        return MonomialBraiding(self.dim, target, self.solution, R)


def _apply_at(c: MonomialBraiding, pos: int, coef: CycloNum, word: tuple) -> tuple[CycloNum, tuple]:
    r, si, tj = c(word[pos], word[pos + 1])
    out = list(word)
    out[pos], out[pos + 1] = si, tj
    return coef * r, tuple(out)


def braid_violation(c: MonomialBraiding) -> Optional[tuple[int, int, int]]:
    """First basis triple where c1 c2 c1 and c2 c1 c2 disagree, or None."""
    one = c.field.one()
    d = c.dim
    for i in range(d):
        for j in range(d):
            for k in range(d):
                w = (i, j, k)
                left = _apply_at(c, 0, *_apply_at(c, 1, *_apply_at(c, 0, one, w)))
                right = _apply_at(c, 1, *_apply_at(c, 0, *_apply_at(c, 1, one, w)))
                if left != right:
                    return w
    return None


def check_braid_equation(c: MonomialBraiding) -> bool:
    return braid_violation(c) is None


def cocycle_check(sol: SetSolution, R: Sequence[Sequence[CycloNum]]) -> bool:
    """
    R_{i,j} R_{tau_j(i),k} R_{sigma_i(j), sigma_{tau_j(i)}(k)}
        = R_{j,k} R_{i,sigma_j(k)} R_{tau_{sigma_j(k)}(i), tau_k(j)}
    for every triple.
    """
    n = sol.size
    for i, row in enumerate(R):
        for j, v in enumerate(row):
            if v.is_zero():
                raise ZeroCoefficientError(f"R[{i}][{j}] is zero")
    sigma, tau = sol.sigma, sol.tau
    for i in range(n):
        for j in range(n):
            ti = tau[j][i]
            sj = sigma[i][j]
            for k in range(n):
                sk = sigma[j][k]
                lhs = R[i][j] * R[ti][k] * R[sj][sigma[ti][k]]
                rhs = R[j][k] * R[i][sk] * R[tau[sk][i]][tau[k][j]]
                if lhs != rhs:
                    return False
    return True


# ---------------------------------------------------------------------------
# Twists
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TwistPair:
    phi1: MonomialOperator
    phi2: MonomialOperator

    def __post_init__(self):
        if self.phi1.dim != self.phi2.dim:
            raise DimensionMismatchError(f"twist maps act on dims {self.phi1.dim} and {self.phi2.dim}")

    @property
    def dim(self) -> int:
        return self.phi1.dim


@dataclass(frozen=True)
class TwistResult:
    tilde: MonomialBraiding
    bar: MonomialBraiding
    equal: bool
    braided: Optional[bool] = None


def _conjugate(C: MonomialOperator, left: MonomialOperator, right: MonomialOperator) -> MonomialOperator:
    T = tensor(left, right)
    return compose(T.inverse(), compose(C, T))


def twist_conjugate(c: MonomialBraiding, t: TwistPair) -> TwistResult:
    """
    tilde = (phi1^-1 (x) phi2^-1) c (phi1 (x) phi2) and
    bar = (phi2^-1 (x) phi1^-1) c (phi2 (x) phi1).

    When the two agree, tilde is again a braiding with the same Nichols
    dimensions as c; `braided` records the braid-equation check of tilde.
    """
    if t.dim != c.dim:
        raise DimensionMismatchError(f"twist of dim {t.dim} for a braiding of dim {c.dim}")
    for name, phi in (("phi1", t.phi1), ("phi2", t.phi2)):
        if not phi.is_invertible():
            raise NotInvertibleError(f"{name} is not invertible")
    C = c.as_operator()
    tilde_op = _conjugate(C, t.phi1, t.phi2)
    bar_op = _conjugate(C, t.phi2, t.phi1)
    tilde = MonomialBraiding.from_operator(tilde_op, c.dim)
    bar = MonomialBraiding.from_operator(bar_op, c.dim)
    equal = tilde_op == bar_op
    return TwistResult(tilde, bar, equal, check_braid_equation(tilde) if equal else None)


def scaled_permutation(perm: Sequence[int], scale: Sequence[CycloNum], field: CycloField) -> MonomialOperator:
    """w_b -> scale[b] * w_perm[b]."""
    return MonomialOperator(perm, scale, field)


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def flip_braiding(dim: int, field: Optional[CycloField] = None) -> MonomialBraiding:
    """w_i (x) w_j -> w_j (x) w_i."""
    field = field or make_field(1)
    one = field.one()
    return MonomialBraiding(dim, field, flip_solution(dim), tuple((one,) * dim for _ in range(dim)))


def scalar_braiding(q: CycloNum) -> MonomialBraiding:
    """The one-dimensional braiding w (x) w -> q w (x) w."""
    return MonomialBraiding(1, q.field, flip_solution(1), ((q,),))


def diagonal_braiding(matrix: Sequence[Sequence[CycloNum]]) -> MonomialBraiding:
    """w_i (x) w_j -> q_ij w_j (x) w_i."""
    dim = len(matrix)
    field = matrix[0][0].field
    return MonomialBraiding(dim, field, flip_solution(dim), tuple(tuple(row) for row in matrix))


def restrict(c: MonomialBraiding, indices: Sequence[int]) -> MonomialBraiding:
    """The braiding induced on span{w_i : i in indices}; the span must be stable under c."""
    idx = list(indices)
    pos = {k: n for n, k in enumerate(idx)}
    if len(pos) != len(idx):
        raise BraidingError("repeated index in restriction")

    def rule(a, b):
        coeff, si, tj = c(idx[a], idx[b])
        if si not in pos or tj not in pos:
            raise BraidingError(
                f"span of {[i + 1 for i in idx]} is not closed: "
                f"c(w{idx[a] + 1} w{idx[b] + 1}) leaves it"
            )
        return coeff, pos[si], pos[tj]

    return MonomialBraiding.from_rule(len(idx), c.field, rule)
