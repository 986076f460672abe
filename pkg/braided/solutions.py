"""
Set-theoretic solutions of the Yang-Baxter equation and racks.

Elements are 0-based internally. A solution stores r(i, j) = (sigma_i(j), tau_j(i))
as two tables; a rack stores its Cayley table op[i][j] = i |> j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from config import RACK_SEARCH_LIMIT

Table = tuple[tuple[int, ...], ...]


class DegenerateSolutionError(ValueError):
    """A construction that needs every sigma_i and tau_j to be bijective got one that is not."""


class RackError(ValueError):
    """Invalid rack table, size mismatch, or an isomorphism search out of range."""


def _is_perm(row: Sequence[int], size: int) -> bool:
    return len(row) == size and sorted(row) == list(range(size))


def _invert(row: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(row)
    for i, k in enumerate(row):
        inv[k] = i
    return tuple(inv)


@dataclass(frozen=True)
class SetSolution:
    """r(i, j) = (sigma[i][j], tau[j][i]) on X = {0, ..., size - 1}."""

    size: int
    sigma: Table
    tau: Table

    def __post_init__(self):
        for name, table in (("sigma", self.sigma), ("tau", self.tau)):
            if len(table) != self.size or any(len(row) != self.size for row in table):
                raise ValueError(f"{name} must be a {self.size}x{self.size} table")
            if any(not 0 <= k < self.size for row in table for k in row):
                raise ValueError(f"{name} has entries outside [0, {self.size})")

    @classmethod
    def from_map(cls, size: int, fn: Callable[[int, int], tuple[int, int]]) -> SetSolution:
        """Tabulate r from a function (i, j) -> (sigma_i(j), tau_j(i))."""
        sigma = [[0] * size for _ in range(size)]
        tau = [[0] * size for _ in range(size)]
        for i in range(size):
            for j in range(size):
                x, y = fn(i, j)
                sigma[i][j] = x
                tau[j][i] = y
        return cls(size, tuple(map(tuple, sigma)), tuple(map(tuple, tau)))

    def __call__(self, i: int, j: int) -> tuple[int, int]:
        return self.sigma[i][j], self.tau[j][i]

    def pairs(self):
        for i in range(self.size):
            for j in range(self.size):
                yield (i, j), self(i, j)

    def is_bijective(self) -> bool:
        return len({v for _, v in self.pairs()}) == self.size * self.size

    def conjugate_by(self, f: Sequence[int]) -> SetSolution:
        """(f^-1 x f^-1) r (f x f)."""
        finv = _invert(f)

        def fn(a, b):
            x, y = self(f[a], f[b])
            return finv[x], finv[y]

        return SetSolution.from_map(self.size, fn)

    def transport(self, h: Sequence[int]) -> SetSolution:
        """(h x h) r (h^-1 x h^-1): the same solution with every element renamed by h."""
        return self.conjugate_by(_invert(h))


@dataclass(frozen=True)
class SolutionFlags:
    ybe: bool
    nondegenerate: bool
    involutive: bool

    def as_dict(self) -> dict:
        return {"ybe": self.ybe, "nondegenerate": self.nondegenerate, "involutive": self.involutive}


def ybe_violation(sol: SetSolution) -> Optional[tuple[int, int, int]]:
    """First triple on which (r x id)(id x r)(r x id) and (id x r)(r x id)(id x r) differ."""
    n = sol.size
    for x in range(n):
        for y in range(n):
            a1, b1 = sol(x, y)
            for z in range(n):
                # r12 r23 r12
                b2, c2 = sol(b1, z)
                a3, b3 = sol(a1, b2)
                left = (a3, b3, c2)
                # r23 r12 r23
                p1, q1 = sol(y, z)
                p2, q2 = sol(x, p1)
                r2, r3 = sol(q2, q1)
                if left != (p2, r2, r3):
                    return x, y, z
    return None


def is_nondegenerate(sol: SetSolution) -> bool:
    return all(_is_perm(row, sol.size) for row in sol.sigma) and \
        all(_is_perm(row, sol.size) for row in sol.tau)


def is_involutive(sol: SetSolution) -> bool:
    return all(sol(*sol(i, j)) == (i, j) for i in range(sol.size) for j in range(sol.size))


def solution_checks(sol: SetSolution) -> SolutionFlags:
    return SolutionFlags(
        ybe=ybe_violation(sol) is None,
        nondegenerate=is_nondegenerate(sol),
        involutive=is_involutive(sol),
    )


def flip_solution(size: int) -> SetSolution:
    """r(i, j) = (j, i)."""
    return SetSolution.from_map(size, lambda i, j: (j, i))


# ---------------------------------------------------------------------------
# Racks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Rack:
    """Cayley table op[i][j] = i |> j on {0, ..., size - 1}."""

    size: int
    op: Table

    def __post_init__(self):
        if len(self.op) != self.size or any(len(row) != self.size for row in self.op):
            raise RackError(f"rack table must be {self.size}x{self.size}")
        if any(not 0 <= k < self.size for row in self.op for k in row):
            raise RackError(f"rack table has entries outside [0, {self.size})")

    def __call__(self, i: int, j: int) -> int:
        return self.op[i][j]

    def violations(self) -> list[str]:
        """Human-readable reasons this table is not a rack (empty if it is)."""
        problems = []
        for i, row in enumerate(self.op):
            if not _is_perm(row, self.size):
                problems.append(f"left translation by {i} is not a bijection")
        op = self.op
        for i in range(self.size):
            for j in range(self.size):
                for k in range(self.size):
                    if op[i][op[j][k]] != op[op[i][j]][op[i][k]]:
                        problems.append(f"self-distributivity fails at ({i}, {j}, {k})")
                        return problems
        return problems

    def is_valid(self) -> bool:
        return not self.violations()

    def check(self) -> Rack:
        problems = self.violations()
        if problems:
            raise RackError(problems[0])
        return self

    def is_quandle(self) -> bool:
        return all(self.op[i][i] == i for i in range(self.size))


def dihedral_rack(n: int) -> Rack:
    """D_n: Z_n with i |> j = 2i - j."""
    if n < 1:
        raise RackError(f"dihedral rack needs n >= 1, got {n}")
    return Rack(n, tuple(tuple((2 * i - j) % n for j in range(n)) for i in range(n)))


def trivial_rack(n: int) -> Rack:
    return Rack(n, tuple(tuple(range(n)) for _ in range(n)))


def rack_to_solution(rack: Rack) -> SetSolution:
    """r(x, y) = (x |> y, x)."""
    return SetSolution.from_map(rack.size, lambda x, y: (rack(x, y), x))


def derived_rack(sol: SetSolution) -> Rack:
    """x |> y = tau_x sigma_{tau_y^-1(x)} (y)."""
    if not is_nondegenerate(sol):
        raise DegenerateSolutionError("derived rack needs a non-degenerate solution")
    tau_inv = [_invert(row) for row in sol.tau]
    n = sol.size
    op = tuple(
        tuple(sol.tau[x][sol.sigma[tau_inv[y][x]][y]] for y in range(n))
        for x in range(n)
    )
    return Rack(n, op).check()


def conjugate_by_T(sol: SetSolution) -> SetSolution:
    """T r T^-1 with T(x, y) = (tau_y(x), y); always of the form (x, y) -> (x |> y, x)."""
    return rack_to_solution(derived_rack(sol))


def is_rack_type(sol: SetSolution) -> bool:
    """True when tau_y is the identity for every y, i.e. r(x, y) = (sigma_x(y), x)."""
    return all(sol.tau[y][x] == x for x in range(sol.size) for y in range(sol.size))


def residue_labels(size: int, modulus: Optional[int] = None) -> tuple[int, ...]:
    """Map element i (label i + 1) to (i + 1) mod m in Z_m; label m goes to 0."""
    m = size if modulus is None else modulus
    return tuple((i + 1) % m for i in range(size))


def is_homomorphism(a: Rack, b: Rack, f: Sequence[int]) -> bool:
    return all(f[a(x, y)] == b(f[x], f[y]) for x in range(a.size) for y in range(a.size))


def rack_isomorphic(a: Rack, b: Rack, f: Optional[Sequence[int]] = None,
                    limit: int = RACK_SEARCH_LIMIT) -> Optional[tuple[int, ...]]:
    """
    Return a rack isomorphism a -> b, or None.

    With f given, only f is checked. Without it, bijections are searched by
    backtracking, extending a partial map only while it stays compatible with
    both tables; sizes above `limit` are refused.
    """
    if a.size != b.size:
        raise RackError(f"racks have different sizes ({a.size} vs {b.size})")
    n = a.size
    if f is not None:
        f = tuple(f)
        if not _is_perm(f, n):
            raise RackError("candidate map is not a bijection")
        return f if is_homomorphism(a, b, f) else None
    if n > limit:
        raise RackError(f"brute-force isomorphism search is limited to size {limit}; pass an explicit bijection")

    # cheap invariant: number of fixed points of each left translation
    def profile(r: Rack) -> list[int]:
        return [sum(1 for j in range(n) if r(i, j) == j) for i in range(n)]

    pa, pb = profile(a), profile(b)
    if sorted(pa) != sorted(pb):
        return None

    image = [-1] * n
    used = [False] * n

    def consistent(x: int) -> bool:
        fx = image[x]
        for y in range(x + 1):
            fy = image[y]
            for u, v, fu, fv in ((x, y, fx, fy), (y, x, fy, fx)):
                w = a(u, v)
                if image[w] != -1 and image[w] != b(fu, fv):
                    return False
                # a(u, v) not yet placed: its image is forced, so it must be free
                if image[w] == -1 and used[b(fu, fv)]:
                    return False
        return True

    def extend(x: int) -> bool:
        if x == n:
            return True
        for t in range(n):
            if used[t] or pa[x] != pb[t]:
                continue
            image[x] = t
            used[t] = True
            if consistent(x) and extend(x + 1):
                return True
            image[x] = -1
            used[t] = False
        return False

    if extend(0):
        f = tuple(image)
        return f if is_homomorphism(a, b, f) else None
    return None
