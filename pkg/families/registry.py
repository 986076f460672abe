"""
Family registry and the classification decision table.

Each entry knows how to read its parameters from a plain dict (CLI flags or a
JSON descriptor), how to build its braiding when it has one, and which
verdict rule applies.
"""

from typing import Any, Optional

from braided.braiding import MonomialBraiding
from families.cases import ParameterError
from families.i_family import i_family, i_verdict
from families.k_family import KParams, k_braiding, k_twist, k_verdict
from families.l_family import l_family, l_verdict
from families.n_family import NParams, n_braiding, n_twist, n_verdict
from families.vabe import VAbeParams, v_abe, v_abe_verdict
from families.verdict import FamilyVerdict
from utils.literals import parse_literal


class UnknownFamilyError(KeyError):
    def __init__(self, tag: str):
        self.tag = tag
        super().__init__(f"unknown family {tag!r} (choose from {', '.join(FAMILIES)})")

    def __str__(self) -> str:
        return self.args[0]


def _ints(raw: dict, names: list[str], defaults: Optional[dict] = None) -> dict:
    out = dict(defaults or {})
    for name in names:
        if name in raw and raw[name] is not None:
            try:
                out[name] = int(raw[name])
            except (TypeError, ValueError):
                raise ParameterError(f"parameter {name} must be an integer, got {raw[name]!r}")
        elif name not in out:
            raise ParameterError(f"missing parameter {name}")
    return out


def _vabe_params(raw: dict) -> VAbeParams:
    missing = [name for name in ("a", "b", "e") if raw.get(name) is None]
    if missing:
        raise ParameterError(f"missing parameter {', '.join(missing)}")
    return VAbeParams(*(parse_literal(raw[name]) for name in ("a", "b", "e")))


def _k_params(raw: dict) -> KParams:
    return KParams(**_ints(raw, ["N", "n", "j", "k", "p", "s", "mu", "lam"], {"mu": 1, "lam": 1}))


def _n_params(raw: dict) -> NParams:
    return NParams(**_ints(raw, ["N", "n", "k", "p", "q", "s", "mu", "lam"], {"mu": 1, "lam": 1}))


def _rank(raw: dict) -> int:
    return _ints(raw, ["n"])["n"]


# Status: "finite" = verdict may be finite, "open" = dimension undetermined
FAMILIES = {
    "Vabe": {
        "name": "V_abe",
        "description": "2-dim braidings v1v1 -> a v2v2, v1v2 -> b v1v2, v2v1 -> b v2v1, v2v2 -> e v1v1",
        "params": _vabe_params,
        "braiding": v_abe,
        "twist": None,
        "solution": None,
        "verdict": v_abe_verdict,
        "flags": ["a", "b", "e"],
        "status": "finite",
    },
    "K": {
        "name": "K family",
        "description": "2n-dim braidings over Q(zeta_8nN); rack type D_2n after twisting",
        "params": _k_params,
        "braiding": k_braiding,
        "twist": k_twist,
        "solution": None,
        "verdict": k_verdict,
        "flags": ["N", "n", "j", "k", "p", "s", "mu", "lam"],
        "status": "finite",
    },
    "N": {
        "name": "N family",
        "description": "(2n+1)-dim braidings over Q(zeta_8N(2n+1)); rack type D_2n+1 after twisting",
        "params": _n_params,
        "braiding": n_braiding,
        "twist": n_twist,
        "solution": None,
        "verdict": n_verdict,
        "flags": ["N", "n", "k", "p", "q", "s", "mu", "lam"],
        "status": "open",
    },
    "L": {
        "name": "L family",
        "description": "set solution on [1, 2n+1], dihedral D_2n+1 after relabelling",
        "params": _rank,
        "braiding": None,
        "twist": None,
        "solution": l_family,
        "verdict": l_verdict,
        "flags": ["n"],
        "status": "open",
    },
    "I": {
        "name": "I family",
        "description": "set solution on [1, 2n], dihedral D_2n after relabelling",
        "params": _rank,
        "braiding": None,
        "twist": None,
        "solution": i_family,
        "verdict": i_verdict,
        "flags": ["n"],
        "status": "finite",
    },
}


def get_family(tag: str) -> dict:
    """
    Raises:
        UnknownFamilyError: tag not in FAMILIES
    """
    if tag not in FAMILIES:
        raise UnknownFamilyError(tag)
    return FAMILIES[tag]


def build_params(tag: str, raw: dict) -> Any:
    return get_family(tag)["params"](raw)


def build_braiding(tag: str, raw: dict) -> MonomialBraiding:
    family = get_family(tag)
    if family["braiding"] is None:
        raise ParameterError(f"family {tag} has no braiding coefficients, only a set solution")
    return family["braiding"](family["params"](raw))


def classify(tag: str, raw: dict) -> FamilyVerdict:
    """
    Decision table: V_abe and K by their dimension formulas, D_2n rack type
    with n > 2 infinite, D_2n+1 rack type (L, N) open.

    Raises:
        UnknownFamilyError: tag not in FAMILIES
        ParameterError: parameters out of range
    """
    family = get_family(tag)
    return family["verdict"](family["params"](raw))
