"""
JSON formats.

    braiding  {"dim": d, "order": M, "entries": [{"i", "j", "si", "tj", "coeff"}, ...]}   1-based
    solution  {"size": m, "entries": [{"i", "j", "si", "tj"}, ...]}                      1-based
    rack      {"size": n, "table": [[i |> j, ...], ...]}                                 0-based
    family    {"family": tag, "params": {...}}

Coefficients are {"order": M, "exp": k, "sign": s} for roots of unity, otherwise
{"order": M, "coeffs": [[num, den], ...]} in the power basis of Q(zeta_M).
Literal strings ("z3^2", "-1", "3/2") are accepted on input.
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Union

from algebra.cyclo import CycloField, CycloNum, RootExpr, make_field
from algebra.exactla import SparseMatrix
from braided.braiding import MonomialBraiding
from braided.solutions import Rack, SetSolution
from utils.literals import ParseError, parse_literal


def scalar_to_json(x: Union[CycloNum, RootExpr]) -> dict:
    """
    Roots of unity as {"order": M, "exp": k, "sign": s}, anything else as
    {"order": M, "coeffs": [[num, den], ...]} in degree order 0..phi(M)-1.
    """
    root = x if isinstance(x, RootExpr) else x.as_root()
    if root is not None:
        return {"order": root.field.order, "exp": root.exponent, "sign": root.sign}
    return {
        "order": x.field.order,
        "coeffs": [[c.numerator, c.denominator] for c in map(Fraction, x.coeffs)],
    }


def _rational(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise ValueError(value)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, list) and len(value) == 2 and all(
            isinstance(v, int) and not isinstance(v, bool) for v in value):
        return Fraction(value[0], value[1])
    raise ValueError(value)


def scalar_from_json(value: Any, field: CycloField, where: str = "coeff") -> CycloNum:
    """
    Read a scalar of `field`: the root or coefficient object written by
    scalar_to_json, or a literal string such as "z3^2".

    Raises:
        ParseError: malformed value, wrong order, or not an element of `field`
    """
    if isinstance(value, (int, str)) and not isinstance(value, bool):
        try:
            return parse_literal(str(value), field)
        except ParseError as e:
            raise ParseError(f"{where}: {e}")
        except ValueError as e:
            raise ParseError(f"{where}: {value!r} does not lie in {field}: {e}")
    if not isinstance(value, dict):
        raise ParseError(f"{where}: expected a literal or a scalar object, got {value!r}")

    order = _require(value, "order", int, where)
    if order != field.order:
        raise ParseError(f"{where}.order: {order} does not match the field order {field.order}")
    if "exp" in value:
        exp = _require(value, "exp", int, where)
        sign = value.get("sign", 1)
        if not isinstance(sign, int) or isinstance(sign, bool) or sign not in (1, -1):
            raise ParseError(f"{where}.sign: expected 1 or -1, got {sign!r}")
        return RootExpr(field, exp, sign).to_cyclo()

    coeffs = _require(value, "coeffs", list, where)
    if len(coeffs) != field.degree:
        raise ParseError(f"{where}.coeffs: expected {field.degree} entries, got {len(coeffs)}")
    try:
        return field.element(_rational(c) for c in coeffs)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{where}.coeffs: expected [num, den] pairs, got {coeffs!r}")


def _require(doc: dict, key: str, kind, where: str):
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError(f"{where}: missing key {key!r}")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ParseError(f"{where}.{key}: expected {getattr(kind, '__name__', kind)}, got {value!r}")
    return value


def _index(doc: dict, key: str, size: int, where: str) -> int:
    value = _require(doc, key, int, where)
    if not 1 <= value <= size:
        raise ParseError(f"{where}.{key}: index {value} outside [1, {size}]")
    return value - 1


# ---------------------------------------------------------------------------
# Braidings and solutions
# ---------------------------------------------------------------------------

def braiding_to_json(c: MonomialBraiding) -> dict:
    return {
        "dim": c.dim,
        "order": c.field.order,
        "entries": [
            {"i": i + 1, "j": j + 1, "si": si + 1, "tj": tj + 1, "coeff": scalar_to_json(v)}
            for i, j, si, tj, v in c.entries()
        ],
    }


def _entry_table(doc: dict, size: int, where: str) -> dict:
    entries = _require(doc, "entries", list, where)
    table = {}
    for n, entry in enumerate(entries):
        at = f"{where}.entries[{n}]"
        i, j = _index(entry, "i", size, at), _index(entry, "j", size, at)
        if (i, j) in table:
            raise ParseError(f"{at}: duplicate entry for ({i + 1}, {j + 1})")
        table[i, j] = (entry, at)
    missing = [(i + 1, j + 1) for i in range(size) for j in range(size) if (i, j) not in table]
    if missing:
        raise ParseError(f"{where}.entries: no entry for {missing[0]} ({len(missing)} missing)")
    return table


def braiding_from_json(doc: dict, where: str = "braiding") -> MonomialBraiding:
    """
    Raises:
        ParseError: naming the offending key
    """
    dim = _require(doc, "dim", int, where)
    order = _require(doc, "order", int, where)
    if dim < 1 or order < 1:
        raise ParseError(f"{where}: dim and order must be positive")
    field = make_field(order)
    table = _entry_table(doc, dim, where)

    def rule(i, j):
        entry, at = table[i, j]
        coeff = scalar_from_json(entry.get("coeff"), field, f"{at}.coeff")
        return coeff, _index(entry, "si", dim, at), _index(entry, "tj", dim, at)

    try:
        return MonomialBraiding.from_rule(dim, field, rule)
    except ParseError:
        raise
    except ValueError as e:
        raise ParseError(f"{where}: {e}")


def solution_to_json(sol: SetSolution) -> dict:
    return {
        "size": sol.size,
        "entries": [
            {"i": i + 1, "j": j + 1, "si": x + 1, "tj": y + 1}
            for (i, j), (x, y) in sol.pairs()
        ],
    }


def solution_from_json(doc: dict, where: str = "solution") -> SetSolution:
    size = _require(doc, "size", int, where)
    if size < 1:
        raise ParseError(f"{where}.size: must be positive")
    table = _entry_table(doc, size, where)

    def fn(i, j):
        entry, at = table[i, j]
        return _index(entry, "si", size, at), _index(entry, "tj", size, at)

    return SetSolution.from_map(size, fn)


# ---------------------------------------------------------------------------
# Racks
# ---------------------------------------------------------------------------

def rack_to_json(rack: Rack) -> dict:
    return {"size": rack.size, "table": [list(row) for row in rack.op]}


def rack_from_json(doc: dict, where: str = "rack") -> Rack:
    size = _require(doc, "size", int, where)
    rows = _require(doc, "table", list, where)
    if len(rows) != size or any(not isinstance(row, list) or len(row) != size for row in rows):
        raise ParseError(f"{where}.table: expected a {size}x{size} table")
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < size:
                raise ParseError(f"{where}.table[{i}][{j}]: {v!r} is not an element of [0, {size - 1}]")
    return Rack(size, tuple(tuple(row) for row in rows))


# ---------------------------------------------------------------------------
# Documents
# ---------------------------------------------------------------------------

def family_descriptor(tag: str, params: dict) -> dict:
    return {"family": tag, "params": params}


def read_descriptor(doc: dict) -> tuple[str, dict]:
    tag = _require(doc, "family", str, "descriptor")
    params = doc.get("params", {})
    if not isinstance(params, dict):
        raise ParseError(f"descriptor.params: expected an object, got {params!r}")
    return tag, params


def load_json(path: Union[str, Path]) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}")
    except OSError as e:
        raise ParseError(f"{path}: {e.strerror}")


def canonical_json(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def dump_json(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)


def matrix_triplets(A: SparseMatrix) -> list[str]:
    """Debug dump: one {"r", "c", "v"} JSON line per stored entry."""
    lines = []
    for c, col in sorted(A.columns().items()):
        for r in sorted(col):
            lines.append(json.dumps({"r": r, "c": c, "v": scalar_to_json(col[r])}))
    return lines
