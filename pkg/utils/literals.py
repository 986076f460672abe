"""
Exact scalar literals for the command line and JSON files.

    1, -1, 3/2       rationals
    z3, z3^2, -z8^3  (signed) powers of zeta_M
"""

import math
import re
from fractions import Fraction
from typing import Optional

from algebra.cyclo import CycloField, CycloNum, make_field


class ParseError(ValueError):
    """A literal or JSON document that cannot be read; names the offending key or text."""


ROOT_PATTERN = re.compile(r"^\s*([+-]?)\s*z(\d+)(?:\^(-?\d+))?\s*$")
RATIONAL_PATTERN = re.compile(r"^\s*[+-]?\d+(?:/\d+)?\s*$")


def literal_order(text: str) -> int:
    """The M of a zM^k literal, 1 for a rational."""
    m = ROOT_PATTERN.match(str(text))
    return int(m.group(2)) if m else 1


def parse_literal(text: str, field: Optional[CycloField] = None) -> CycloNum:
    """
    Parse a literal into Q(zeta_M) (or into `field` when given, which must contain it).

    Raises:
        ParseError: on malformed text
    """
    text = str(text)
    m = ROOT_PATTERN.match(text)
    if m:
        sign, order, power = m.group(1), int(m.group(2)), m.group(3)
        if order < 1:
            raise ParseError(f"root order must be positive in {text!r}")
        value = make_field(order).power(int(power) if power is not None else 1)
        if sign == "-":
            value = -value
        return value.embed(field) if field is not None else value
    if RATIONAL_PATTERN.match(text):
        target = field or make_field(1)
        try:
            return target.from_rational(Fraction(text.strip()))
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {text!r}")
    raise ParseError(f"cannot read {text!r} as a scalar (expected 1, -1, p/q or zM^k)")


def format_literal(x: CycloNum) -> str:
    """Inverse of parse_literal for roots of unity and rationals; other values print as polynomials."""
    root = x.as_root()
    if root is not None:
        L, t = root.pure_power()
        t %= L
        g = math.gcd(t, L)
        L, t = L // g, t // g
        if t == 0:
            return "1"
        if L == 2:
            return "-1"
        return f"z{L}" if t == 1 else f"z{L}^{t}"
    if not any(x.coeffs[1:]):
        return str(x.coeffs[0])
    return str(x)
