"""
Exact arithmetic in cyclotomic fields Q(zeta_M).

An element is a coefficient vector of length phi(M): a polynomial in zeta_M
reduced modulo the M-th cyclotomic polynomial. Coefficients are exact
rationals; they stay plain ints until a division introduces a Fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Union

Rational = Union[int, Fraction]


class FieldMismatchError(TypeError):
    """Operands belong to different cyclotomic fields."""


class EmbeddingError(ValueError):
    """Source order does not divide the target order."""


class NotARootError(ValueError):
    """A value that had to be +-zeta^k is a general field element."""


def _canon(c: Rational) -> Rational:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


# ---------------------------------------------------------------------------
# Integer / rational polynomial helpers (coefficient lists, low degree first)
# ---------------------------------------------------------------------------

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Divide integer polynomials where den is monic and divides num."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


def _pmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _trim(out)


def _psub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def _pdivmod(a: list, b: list) -> tuple[list, list]:
    a = [Fraction(x) for x in a]
    lead = Fraction(b[-1])
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for j, y in enumerate(b):
            a[shift + j] -= c * y
        _trim(a)
    return _trim(q), a


@lru_cache(maxsize=None)
def cyclotomic_poly(order: int) -> tuple[int, ...]:
    """
    Coefficients of Phi_M, low degree first.

    Computed by dividing x^M - 1 by Phi_d for every proper divisor d of M.
    """
    if order < 1:
        raise ValueError(f"cyclotomic order must be positive, got {order}")
    num = [-1] + [0] * (order - 1) + [1]
    for d in range(1, order):
        if order % d == 0:
            num = _divexact(num, cyclotomic_poly(d))
    return tuple(num)


# ---------------------------------------------------------------------------
# Fields
# ---------------------------------------------------------------------------

class CycloField:
    """The field Q(zeta_M) with its table of reduced powers of zeta_M."""

    __slots__ = ("order", "min_poly", "degree", "_powers")

    def __init__(self, order: int):
        self.order = order
        self.min_poly = cyclotomic_poly(order)
        self.degree = len(self.min_poly) - 1
        self._powers = self._power_table()

    def _power_table(self) -> tuple[tuple[int, ...], ...]:
        phi = self.degree
        cur = [0] * phi
        cur[0] = 1
        table = []
        for _ in range(self.order):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(phi):
                    cur[i] -= top * self.min_poly[i]
        return tuple(table)

    def __eq__(self, other) -> bool:
        return isinstance(other, CycloField) and other.order == self.order

    def __hash__(self) -> int:
        return hash(("CycloField", self.order))

    def __repr__(self) -> str:
        return f"Q(zeta_{self.order})"

    def zero(self) -> CycloNum:
        return CycloNum._raw(self, (0,) * self.degree)

    def one(self) -> CycloNum:
        return self.power(0)

    def gen(self) -> CycloNum:
        return self.power(1)

    def power(self, k: int) -> CycloNum:
        return CycloNum._raw(self, self._powers[k % self.order])

    def from_rational(self, q: Rational) -> CycloNum:
        coeffs = [0] * self.degree
        coeffs[0] = _canon(Fraction(q)) if not isinstance(q, int) else q
        return CycloNum._raw(self, tuple(coeffs))

    def element(self, coeffs: Iterable[Rational]) -> CycloNum:
        return CycloNum(self, coeffs)


@lru_cache(maxsize=None)
def make_field(order: int) -> CycloField:
    """Return the (shared) field Q(zeta_M)."""
    if order < 1:
        raise ValueError(f"unsupported cyclotomic order {order}")
    return CycloField(order)


def common_field(*orders: int) -> CycloField:
    """Smallest cyclotomic field containing zeta_M for every given M."""
    return make_field(math.lcm(*orders) if orders else 1)


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------

class CycloNum:
    """An element of Q(zeta_M). Immutable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CycloField, coeffs: Iterable[Rational]):
        coeffs = tuple(_canon(Fraction(c)) if not isinstance(c, int) else c for c in coeffs)
        if len(coeffs) != field.degree:
            raise ValueError(
                f"{field} elements need {field.degree} coefficients, got {len(coeffs)}"
            )
        self.field = field
        self.coeffs = coeffs

    @classmethod
    def _raw(cls, field: CycloField, coeffs: tuple) -> CycloNum:
        obj = object.__new__(cls)
        obj.field = field
        obj.coeffs = coeffs
        return obj

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other) -> Optional[CycloNum]:
        if isinstance(other, CycloNum):
            if other.field.order != self.field.order:
                raise FieldMismatchError(f"cannot combine {self.field} with {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        if isinstance(other, RootExpr):
            return self._coerce(other.to_cyclo())
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycloNum._raw(self.field, tuple(_canon(a + b) for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycloNum:
        return CycloNum._raw(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycloNum._raw(self.field, tuple(_canon(a - b) for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum._raw(self.field, tuple(_canon(a * other) for a in self.coeffs))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        phi = len(a)
        acc = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        acc[i + j] += x * y
        out = acc[:phi]
        powers = self.field._powers
        for k in range(phi, 2 * phi - 1):
            c = acc[k]
            if c:
                for i, r in enumerate(powers[k % self.field.order]):
                    if r:
                        out[i] += c * r
        return CycloNum._raw(self.field, tuple(_canon(c) for c in out))

    __rmul__ = __mul__

    def inverse(self) -> CycloNum:
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_M."""
        field = self.field
        support = [i for i, c in enumerate(self.coeffs) if c]
        if not support:
            raise ZeroDivisionError(f"division by zero in {field}")
        if len(support) == 1:
            # c * zeta^i
            i = support[0]
            c = Fraction(1) / self.coeffs[i]
            return CycloNum._raw(field, tuple(_canon(c * r) for r in field._powers[(-i) % field.order]))

        r0: list = [Fraction(c) for c in field.min_poly]
        r1: list = _trim([Fraction(c) for c in self.coeffs])
        s0: list = []
        s1: list = [Fraction(1)]
        while r1:
            q, rem = _pdivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        # Phi_M is irreducible, so the gcd r0 is a nonzero constant
        g = r0[0]
        inv = [c / g for c in s0]
        return CycloNum._reduce(field, inv)

    @classmethod
    def _reduce(cls, field: CycloField, poly: list) -> CycloNum:
        phi = field.degree
        out = [0] * phi
        for k, c in enumerate(poly):
            if c:
                if k < phi:
                    out[k] += c
                else:
                    for i, r in enumerate(field._powers[k % field.order]):
                        if r:
                            out[i] += c * r
        return CycloNum._raw(field, tuple(_canon(c) for c in out))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError(f"division by zero in {self.field}")
            return self * (Fraction(1) / other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> CycloNum:
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloNum):
            return other.field.order == self.field.order and other.coeffs == self.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        if isinstance(other, RootExpr):
            return self == other.to_cyclo()
        return NotImplemented

    def __hash__(self) -> int:
        if not any(self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash((self.field.order, self.coeffs))

    # -- roots of unity ----------------------------------------------------

    def as_root(self) -> Optional[RootExpr]:
        """Return +-zeta^k equal to this element, or None."""
        field = self.field
        neg = tuple(-c for c in self.coeffs)
        for k, p in enumerate(field._powers):
            if p == self.coeffs:
                return RootExpr(field, k, 1)
            if p == neg:
                return RootExpr(field, k, -1)
        return None

    def root_order(self) -> Optional[int]:
        """Multiplicative order if this element is a root of unity."""
        root = self.as_root()
        return None if root is None else root.order()

    def embed(self, target: CycloField) -> CycloNum:
        return embed(self, target)

    # -- display -----------------------------------------------------------

    def __repr__(self) -> str:
        return f"CycloNum({self.field}, {list(map(str, self.coeffs))})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(f"z{self.field.order}^{i}")
            elif c == -1:
                terms.append(f"-z{self.field.order}^{i}")
            else:
                terms.append(f"{c}*z{self.field.order}^{i}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


@dataclass(frozen=True)
class RootExpr:
    """
    The root of unity sign * zeta_M^exponent.

    Canonical form: exponent in [0, M); when M is even the sign is absorbed
    into the exponent (-1 = zeta_M^(M/2)), so equal values compare equal.
    """

    field: CycloField
    exponent: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        order = self.field.order
        exp = self.exponent % order
        sign = self.sign
        if sign == -1 and order % 2 == 0:
            exp = (exp + order // 2) % order
            sign = 1
        object.__setattr__(self, "exponent", exp)
        object.__setattr__(self, "sign", sign)

    def to_cyclo(self) -> CycloNum:
        p = self.field._powers[self.exponent]
        if self.sign == -1:
            p = tuple(-c for c in p)
        return CycloNum._raw(self.field, p)

    def __mul__(self, other):
        if isinstance(other, RootExpr):
            if other.field.order != self.field.order:
                raise FieldMismatchError(f"cannot combine {self.field} with {other.field}")
            return RootExpr(self.field, self.exponent + other.exponent, self.sign * other.sign)
        if isinstance(other, int) and other in (1, -1):
            return RootExpr(self.field, self.exponent, self.sign * other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> RootExpr:
        return RootExpr(self.field, self.exponent, -self.sign)

    def inverse(self) -> RootExpr:
        return RootExpr(self.field, -self.exponent, self.sign)

    def __pow__(self, k: int) -> RootExpr:
        sign = self.sign if k % 2 else 1
        return RootExpr(self.field, self.exponent * k, sign)

    def pure_power(self) -> tuple[int, int]:
        """(L, t) with this value equal to zeta_L^t."""
        order = self.field.order
        if self.sign == 1:
            return order, self.exponent
        return 2 * order, 2 * self.exponent + order

    def order(self) -> int:
        L, t = self.pure_power()
        return L // math.gcd(t, L)

    def embed(self, target: CycloField) -> RootExpr:
        order = self.field.order
        if target.order % order:
            raise EmbeddingError(f"cannot embed {self.field} into {target}")
        return RootExpr(target, self.exponent * (target.order // order), self.sign)

    def __str__(self) -> str:
        base = f"z{self.field.order}^{self.exponent}" if self.exponent else "1"
        return f"-{base}" if self.sign == -1 else base


# ---------------------------------------------------------------------------
# Module-level operations
# ---------------------------------------------------------------------------

def root_power(field: CycloField, k: int) -> CycloNum:
    """zeta_M^(k mod M)."""
    return field.power(k)


def _prime_factors(m: int) -> list[int]:
    out, p = [], 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def is_primitive_root(x: CycloNum, m: int) -> bool:
    """True iff x lies in G_m, the primitive m-th roots of unity."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if x.is_zero() or not (x ** m).is_one():
        return False
    return all(not (x ** (m // p)).is_one() for p in _prime_factors(m))


def embed(x: CycloNum, target: CycloField) -> CycloNum:
    """Image of x under zeta_M -> zeta_M'^(M'/M)."""
    order = x.field.order
    if target.order % order:
        raise EmbeddingError(f"cannot embed {x.field} into {target}: {order} does not divide {target.order}")
    step = target.order // order
    poly = [0] * (step * (len(x.coeffs) - 1) + 1)
    for i, c in enumerate(x.coeffs):
        poly[i * step] = c
    return CycloNum._reduce(target, poly)
