"""
Case tables: a braiding or solution written as a list of guarded cases.

Each case has a predicate on the 1-based pair (a, b) and a builder returning
the value for that pair. Evaluation insists that exactly one case applies.
"""

from dataclasses import dataclass
from typing import Any, Callable, Iterator, Sequence

from algebra.cyclo import CycloField
from braided.braiding import MonomialBraiding
from braided.solutions import SetSolution


class TotalityError(ValueError):
    """No case, or more than one case, applies to a pair."""

    def __init__(self, table: str, pair: tuple[int, int], matched: Sequence[str]):
        self.table = table
        self.pair = pair
        self.matched = list(matched)
        if matched:
            msg = f"{table}: pair {pair} is covered by several cases: {', '.join(matched)}"
        else:
            msg = f"{table}: pair {pair} is not covered by any case"
        super().__init__(msg)


class ParameterError(ValueError):
    """A family parameter outside its allowed range."""


@dataclass(frozen=True)
class Case:
    name: str
    applies: Callable[[int, int], bool]
    build: Callable[[int, int], Any]


class CaseTable:
    def __init__(self, name: str, cases: Sequence[Case]):
        self.name = name
        self.cases = list(cases)

    def matching(self, a: int, b: int) -> list[Case]:
        return [case for case in self.cases if case.applies(a, b)]

    def evaluate(self, a: int, b: int) -> Any:
        found = self.matching(a, b)
        if len(found) != 1:
            raise TotalityError(self.name, (a, b), [case.name for case in found])
        return found[0].build(a, b)

    def coverage(self, size: int) -> Iterator[tuple[tuple[int, int], list[str]]]:
        """(pair, names of matching cases) over [1, size]^2."""
        for a in range(1, size + 1):
            for b in range(1, size + 1):
                yield (a, b), [case.name for case in self.matching(a, b)]

    def check_totality(self, size: int) -> None:
        for pair, names in self.coverage(size):
            if len(names) != 1:
                raise TotalityError(self.name, pair, names)


def require(condition: bool, message: str) -> None:
    if not condition:
        raise ParameterError(message)


def sign(parity: int) -> int:
    """(-1)^parity."""
    return -1 if parity % 2 else 1


def table_braiding(table: CaseTable, dim: int, field: CycloField) -> MonomialBraiding:
    """
    Braiding whose 1-based entries come from a case table; each case builds
    (coefficient, first output index, second output index).
    """
    def rule(i, j):
        coeff, x, y = table.evaluate(i + 1, j + 1)
        return coeff, x - 1, y - 1

    return MonomialBraiding.from_rule(dim, field, rule)


def table_solution(table: CaseTable, size: int) -> SetSolution:
    """Set-theoretic solution from a 1-based case table of output pairs."""
    def fn(i, j):
        x, y = table.evaluate(i + 1, j + 1)
        return x - 1, y - 1

    return SetSolution.from_map(size, fn)
