"""
The L family: a set-theoretic solution on X = [1, 2n+1] whose relabelling by

    f(a) = a         a odd
           2n+2-a    a even

is the dihedral rack D_(2n+1). Only the solution is modelled; no coefficients.
"""

from dataclasses import dataclass

from braided.solutions import SetSolution, dihedral_rack, rack_to_solution, residue_labels
from families.cases import Case, CaseTable, require, table_solution
from families.verdict import FamilyVerdict, open_problem


@dataclass(frozen=True)
class FamilySolution:
    """A set solution on 1-based labels plus the relabelling f (0-based, f[i] = f(i+1) - 1)."""

    solution: SetSolution
    f: tuple[int, ...]
    modulus: int

    def relabelled(self) -> SetSolution:
        """(f^-1 x f^-1) r (f x f)."""
        return self.solution.conjugate_by(self.f)

    def dihedral(self) -> SetSolution:
        return rack_to_solution(dihedral_rack(self.modulus))

    def is_dihedral(self) -> bool:
        moved = self.relabelled().transport(residue_labels(self.solution.size, self.modulus))
        return moved == self.dihedral()

    def congruence_failures(self) -> list[tuple[int, int]]:
        """1-based pairs (a, b) whose relabelled image (g, a') breaks g = 2a - b mod m or a' = a."""
        m = self.modulus
        out = []
        rel = self.relabelled()
        for (i, j), (x, y) in rel.pairs():
            a, b, g = i + 1, j + 1, x + 1
            if y != i or (g - (2 * a - b)) % m:
                out.append((a, b))
        return out


def l_table(n: int, literal: bool = False) -> CaseTable:
    """
    With b + 2a - 1 = d1(2n+1) + d0 for a+b odd, and 2a - 1 - b = d1(2n+1) + d0
    for a+b even with 2a - 1 >= b.

    `literal=True` keeps the first odd line guarded by d0 = 0, which leaves
    pairs uncovered; the default guards it by d1 = 0.
    """
    size = 2 * n + 1

    def odd(a, b):
        return divmod(b + 2 * a - 1, size)

    def even(a, b):
        return divmod(2 * a - 1 - b, size)

    is_odd = lambda a, b: (a + b) % 2 == 1
    first = (lambda a, b: is_odd(a, b) and odd(a, b)[1] == 0) if literal \
        else (lambda a, b: is_odd(a, b) and odd(a, b)[0] == 0)
    high = lambda a, b: (a + b) % 2 == 0 and 2 * a - 1 >= b

    return CaseTable("L literal" if literal else "L", [
        Case("odd, d1 = 0", first, lambda a, b: (b + 2 * a - 1, a)),
        Case("odd, d1 = 1, d0 = 0", lambda a, b: is_odd(a, b) and odd(a, b) == (1, 0),
             lambda a, b: (size, a)),
        Case("odd, d1 = 1, d0 != 0", lambda a, b: is_odd(a, b) and odd(a, b)[0] == 1 and odd(a, b)[1] != 0,
             lambda a, b: (2 * n + 2 - odd(a, b)[1], a)),
        Case("odd, d1 = 2, d0 = 0", lambda a, b: is_odd(a, b) and odd(a, b) == (2, 0),
             lambda a, b: (1, a)),
        Case("odd, d1 = 2, d0 != 0", lambda a, b: is_odd(a, b) and odd(a, b)[0] == 2 and odd(a, b)[1] != 0,
             lambda a, b: (odd(a, b)[1], a)),
        Case("even, 2a-1 < b", lambda a, b: (a + b) % 2 == 0 and 2 * a - 1 < b,
             lambda a, b: (b - 2 * a + 1, a)),
        Case("even, d1 = 0", lambda a, b: high(a, b) and even(a, b)[0] == 0,
             lambda a, b: (2 * a - b, a)),
        Case("even, d1 = 1", lambda a, b: high(a, b) and even(a, b)[0] == 1,
             lambda a, b: (size - even(a, b)[1], a)),
    ])


def l_relabel(n: int) -> tuple[int, ...]:
    return tuple((a if a % 2 else 2 * n + 2 - a) - 1 for a in range(1, 2 * n + 2))


def l_family(n: int, literal: bool = False) -> FamilySolution:
    """
    Raises:
        ParameterError: n < 1
        TotalityError: a pair no case covers (only with literal=True)
    """
    require(n >= 1, f"L family needs n >= 1, got {n}")
    size = 2 * n + 1
    return FamilySolution(table_solution(l_table(n, literal), size), l_relabel(n), size)


def l_verdict(n: int) -> FamilyVerdict:
    require(n >= 1, f"L family needs n >= 1, got {n}")
    return open_problem("L", {"n": n}, f"D_{2 * n + 1} rack type: dimension not determined")
