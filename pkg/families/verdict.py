"""
Dimension verdicts for the families.
"""

from dataclasses import dataclass, field
from typing import Optional

FINITE = "finite"
INFINITE = "infinite"
OPEN = "open"


@dataclass(frozen=True)
class FamilyVerdict:
    family: str
    params: dict
    verdict: str
    rule: str
    total: Optional[int] = None
    type_name: Optional[str] = None
    notes: list[str] = field(default_factory=list)

    @property
    def finite(self) -> bool:
        return self.verdict == FINITE

    def as_dict(self) -> dict:
        out = {
            "family": self.family,
            "params": self.params,
            "verdict": self.verdict,
            "rule": self.rule,
        }
        if self.total is not None:
            out["total"] = self.total
        if self.type_name:
            out["type"] = self.type_name
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def finite(family: str, params: dict, total: int, type_name: Optional[str], rule: str) -> FamilyVerdict:
    return FamilyVerdict(family, params, FINITE, rule, total, type_name)


def infinite(family: str, params: dict, rule: str) -> FamilyVerdict:
    return FamilyVerdict(family, params, INFINITE, rule)


def open_problem(family: str, params: dict, rule: str) -> FamilyVerdict:
    return FamilyVerdict(family, params, OPEN, rule)
