"""
The (2n+1)-dimensional N family over Q(omega), omega a primitive
8N(2n+1)-th root of unity, B = mu-bar^(1/2) omega^(2k(2n+1)).

The braiding is assembled from two shift maps on w_alpha (x) w_beta, both
landing in the second slot w_(2n-alpha+2):

    R^g:  beta + g <= 2n+1  ->  w_(beta+g)
          beta + g  = 2n+2  ->  (-1)^p lam B w_(2n+1)
          beta + g >= 2n+3  ->  (-1)^p lam B^(2(g+beta)-4n-3) w_(4n+3-g-beta)
    L^g:  g < beta          ->  B^(2g) w_(beta-g)
          g >= beta         ->  (-1)^p B^(2beta-1) w_(g-beta+1)
"""

from dataclasses import dataclass

from algebra.cyclo import CycloField, RootExpr, make_field
from algebra.exactla import MonomialOperator
from braided.braiding import MonomialBraiding, TwistPair
from braided.solutions import dihedral_rack, rack_to_solution, residue_labels
from families.cases import Case, CaseTable, require, sign, table_braiding
from families.verdict import FamilyVerdict, open_problem


@dataclass(frozen=True)
class NParams:
    N: int
    n: int
    k: int
    p: int
    q: int
    s: int
    mu: int = 1
    lam: int = 1

    def __post_init__(self):
        require(self.N >= 1, f"N must be >= 1, got {self.N}")
        require(self.n >= 1, f"n must be >= 1, got {self.n}")
        require(0 <= self.k <= self.N - 1, f"k must lie in [0, {self.N - 1}], got {self.k}")
        require(self.p in (0, 1), f"p must be 0 or 1, got {self.p}")
        require(self.q in (0, 1), f"q must be 0 or 1, got {self.q}")
        require(1 <= self.s <= self.N, f"s must lie in [1, {self.N}], got {self.s}")
        require(self.mu in (1, -1), f"mu must be 1 or -1, got {self.mu}")
        require(self.lam in (1, -1), f"lam must be 1 or -1, got {self.lam}")

    @property
    def dim(self) -> int:
        return 2 * self.n + 1

    @property
    def order(self) -> int:
        return 8 * self.N * (2 * self.n + 1)

    @property
    def field(self) -> CycloField:
        return make_field(self.order)

    @property
    def B(self) -> RootExpr:
        # mu-bar^(1/2) is 1 or zeta_4 = omega^(M/4)
        half = self.order // 4 if self.mu == -1 else 0
        return RootExpr(self.field, 2 * self.k * (2 * self.n + 1) + half)

    def x(self, a: int) -> RootExpr:
        """x_1 = 1, x_2k = lam B^(4n-4k+2), x_2k+1 = B^(4k)."""
        if a % 2 == 0:
            return self.B ** (4 * self.n - 2 * a + 2) * self.lam
        return self.B ** (2 * (a - 1))

    def as_dict(self) -> dict:
        return {"N": self.N, "n": self.n, "k": self.k, "p": self.p, "q": self.q,
                "s": self.s, "mu": self.mu, "lam": self.lam}


def all_n_params(N: int, n: int):
    for lam in (1, -1):
        for mu in (1, -1):
            for k in range(N):
                for p in (0, 1):
                    for q in (0, 1):
                        for s in range(1, N + 1):
                            yield NParams(N, n, k, p, q, s, mu, lam)


def _shift_right(P: NParams, g: int, beta: int) -> tuple[RootExpr, int]:
    n, B = P.n, P.B
    t = beta + g
    if t <= 2 * n + 1:
        return B ** 0, t
    if t == 2 * n + 2:
        return B * sign(P.p) * P.lam, 2 * n + 1
    return B ** (2 * t - 4 * n - 3) * sign(P.p) * P.lam, 4 * n + 3 - t


def _shift_left(P: NParams, g: int, beta: int) -> tuple[RootExpr, int]:
    if g < beta:
        return P.B ** (2 * g), beta - g
    if g <= beta + 2 * P.n:
        return P.B ** (2 * beta - 1) * sign(P.p), g - beta + 1
    raise ValueError(f"L^{g} is undefined on w_{beta}")


def n_table(P: NParams) -> CaseTable:
    n, B, s = P.n, P.B, P.s
    sq = sign(P.q)

    def shifted(shift, lead_exp, g):
        def build(a, b):
            coeff, out = shift(P, g(a), b)
            return B ** lead_exp(a) * coeff * sq, out, 2 * n - a + 2
        return build

    low_exp = lambda a: 2 * (2 * a + s - n - 2)
    high_exp = lambda a: 2 * (s + n)
    low_g = lambda a: 2 * (n - a + 1)
    high_g = lambda a: 2 * (a - 1 - n)
    even = lambda a, b: (a + b) % 2 == 0

    return CaseTable("N braiding", [
        Case("(1) a = n+1", lambda a, b: a == n + 1,
             lambda a, b: (B ** (2 * (n + s)) * sq, b, n + 1)),
        Case("(2) a < n+1, a+b even", lambda a, b: a < n + 1 and even(a, b),
             shifted(_shift_left, low_exp, low_g)),
        Case("(3) a > n+1, a+b odd", lambda a, b: a > n + 1 and not even(a, b),
             shifted(_shift_left, high_exp, high_g)),
        Case("(4) a < n+1, a+b odd", lambda a, b: a < n + 1 and not even(a, b),
             shifted(_shift_right, low_exp, low_g)),
        Case("(5) a > n+1, a+b even", lambda a, b: a > n + 1 and even(a, b),
             shifted(_shift_right, high_exp, high_g)),
    ])


def n_braiding(P: NParams) -> MonomialBraiding:
    return table_braiding(n_table(P), P.dim, P.field)


def n_twist(P: NParams) -> TwistPair:
    """
    phi1(w_a) = x_a w_(2n+2-a) for odd a, x_a w_a for even a;
    phi2(w_a) = w_a for odd a, w_(2n+2-a) for even a.
    """
    n, F = P.n, P.field
    labels = range(1, 2 * n + 2)
    phi1 = MonomialOperator(
        [(2 * n + 2 - a if a % 2 else a) - 1 for a in labels],
        [P.x(a).to_cyclo() for a in labels], F)
    phi2 = MonomialOperator.permutation(
        [(a if a % 2 else 2 * n + 2 - a) - 1 for a in labels], F)
    return TwistPair(phi1, phi2)


# ---------------------------------------------------------------------------
# Conjugated tables
# ---------------------------------------------------------------------------

def _parity(a: int, b: int) -> str:
    return ("o" if a % 2 else "e") + ("o" if b % 2 else "e")


def _region_cases(P: NParams, name: str, region, target, factor, entries, scale):
    """
    One case per parity pattern of (a, b) inside a region. `entries` maps
    "ee"/"oo"/"eo"/"oe" to (uses_lam, exponent of B); `scale(a, b, g)` is the
    twist-scalar prefactor.
    """
    B, lam = P.B, P.lam

    def make(key, uses_lam, exponent):
        def build(a, b):
            g = target(a, b)
            coeff = scale(a, b, g) * B ** exponent(a, b) * factor
            if uses_lam:
                coeff = coeff * lam
            return coeff, g, a
        return Case(f"{name} [{key}]", lambda a, b: region(a, b) and _parity(a, b) == key, build)

    return [make(key, uses_lam, exponent) for key, (uses_lam, exponent) in entries.items()]


def _tilde_table(P: NParams) -> CaseTable:
    n, s, x = P.n, P.s, P.x
    sq, spq = sign(P.q), sign(P.p + P.q)
    scale = lambda a, b, g: x(a) * x(g).inverse()
    same = (False, lambda a, b: 2 * n + 2 * s)

    cases = [Case("(1) a = n+1", lambda a, b: a == n + 1,
                  lambda a, b: (x(n + 1) * x(2 * n + 2 - b).inverse() * P.B ** (2 * n + 2 * s) * sq,
                                2 * n + 2 - b, n + 1))]
    cases += _region_cases(P, "(2) a < n+1, 2a-b > 0",
                           lambda a, b: a < n + 1 and 2 * a - b > 0,
                           lambda a, b: 2 * a - b, sq, {
                               "ee": same, "oo": same,
                               "eo": (False, lambda a, b: 4 * a + 2 * s - 2 * n - 4),
                               "oe": (False, lambda a, b: 6 * n + 4 + 2 * s - 4 * a),
                           }, scale)
    cases += _region_cases(P, "(3) a < n+1, 2a-b <= 0",
                           lambda a, b: a < n + 1 and 2 * a - b <= 0,
                           lambda a, b: 2 * n + 1 + 2 * a - b, spq, {
                               "ee": (False, lambda a, b: 2 * n - 1 + 4 * a - 2 * b + 2 * s),
                               "oo": (True, lambda a, b: 2 * n + 1 - 4 * a + 2 * b + 2 * s),
                               "eo": (True, lambda a, b: -2 * n - 3 + 2 * b + 2 * s),
                               "oe": (False, lambda a, b: 6 * n + 3 - 2 * b + 2 * s),
                           }, scale)
    cases += _region_cases(P, "(4) a > n+1, 2a-b <= 2n+1",
                           lambda a, b: a > n + 1 and 2 * a - b <= 2 * n + 1,
                           lambda a, b: 2 * a - b, sq, {
                               "ee": same, "oo": same,
                               "eo": (False, lambda a, b: -2 * n - 4 + 4 * a + 2 * s),
                               "oe": (False, lambda a, b: 6 * n + 4 - 4 * a + 2 * s),
                           }, scale)
    cases += _region_cases(P, "(5) a > n+1, 2a-b = 2n+2",
                           lambda a, b: a > n + 1 and 2 * a - b == 2 * n + 2,
                           lambda a, b: 1, spq, {
                               "ee": (True, lambda a, b: 2 * n + 1 + 2 * s),
                               "oe": (True, lambda a, b: 6 * n + 5 - 4 * a + 2 * s),
                           }, scale)
    cases += _region_cases(P, "(6) a > n+1, 2a-b > 2n+2",
                           lambda a, b: a > n + 1 and 2 * a - b > 2 * n + 2,
                           lambda a, b: 2 * a - b - 2 * n - 1, spq, {
                               "ee": (True, lambda a, b: -2 * n - 3 + 4 * a - 2 * b + 2 * s),
                               "oo": (False, lambda a, b: 6 * n + 3 - 4 * a + 2 * b + 2 * s),
                               "eo": (False, lambda a, b: 2 * n - 1 + 2 * b + 2 * s),
                               "oe": (True, lambda a, b: 2 * n + 1 - 2 * b + 2 * s),
                           }, scale)
    return CaseTable("N tilde", cases)


def _bar_table(P: NParams) -> CaseTable:
    n, s, x = P.n, P.s, P.x
    sq, spq = sign(P.q), sign(P.p + P.q)
    scale = lambda a, b, g: x(b) * x(a).inverse()
    same = (False, lambda a, b: 2 * n + 2 * s)

    cases = [Case("(1) a = n+1", lambda a, b: a == n + 1,
                  lambda a, b: (scale(a, b, None) * P.B ** (2 * n + 2 * s) * sq, 2 * n + 2 - b, n + 1))]
    cases += _region_cases(P, "(2) a < n+1, 2a-b > 0",
                           lambda a, b: a < n + 1 and 2 * a - b > 0,
                           lambda a, b: 2 * a - b, sq, {
                               "ee": same, "oo": same,
                               "oe": (False, lambda a, b: -2 * n - 4 + 4 * a + 2 * s),
                               "eo": (False, lambda a, b: 6 * n + 4 - 4 * a + 2 * s),
                           }, scale)
    cases += _region_cases(P, "(3) a < n+1, 2a-b = 0",
                           lambda a, b: a < n + 1 and 2 * a - b == 0,
                           lambda a, b: 2 * n + 1, spq, {
                               "ee": (True, lambda a, b: 2 * n + 1 + 2 * s),
                               "oe": (True, lambda a, b: -2 * n - 3 + 4 * a + 2 * s),
                           }, scale)
    cases += _region_cases(P, "(4) a < n+1, 2a-b < 0",
                           lambda a, b: a < n + 1 and 2 * a - b < 0,
                           lambda a, b: 2 * n + 1 + 2 * a - b, spq, {
                               "ee": (True, lambda a, b: 2 * n + 1 - 4 * a + 2 * b + 2 * s),
                               "oo": (False, lambda a, b: 2 * n - 1 + 4 * a - 2 * b + 2 * s),
                               "oe": (True, lambda a, b: -2 * n - 3 + 2 * b + 2 * s),
                               "eo": (False, lambda a, b: 6 * n + 3 - 2 * b + 2 * s),
                           }, scale)
    cases += _region_cases(P, "(5) a > n+1, 2a-b < 2n+2",
                           lambda a, b: a > n + 1 and 2 * a - b < 2 * n + 2,
                           lambda a, b: 2 * a - b, sq, {
                               "ee": same, "oo": same,
                               "eo": (False, lambda a, b: 6 * n + 4 - 4 * a + 2 * s),
                               "oe": (False, lambda a, b: -2 * n - 4 + 4 * a + 2 * s),
                           }, scale)
    cases += _region_cases(P, "(6) a > n+1, 2a-b >= 2n+2",
                           lambda a, b: a > n + 1 and 2 * a - b >= 2 * n + 2,
                           lambda a, b: 2 * a - b - 2 * n - 1, spq, {
                               "ee": (False, lambda a, b: 6 * n + 3 - 4 * a + 2 * b + 2 * s),
                               "oo": (True, lambda a, b: -2 * n - 3 + 4 * a - 2 * b + 2 * s),
                               "eo": (True, lambda a, b: 2 * n + 1 - 2 * b + 2 * s),
                               "oe": (False, lambda a, b: 2 * n - 1 + 2 * b + 2 * s),
                           }, scale)
    return CaseTable("N bar", cases)


def n_closed_form(P: NParams, variant: str) -> MonomialBraiding:
    if variant == "tilde":
        table = _tilde_table(P)
    elif variant == "bar":
        table = _bar_table(P)
    else:
        raise ValueError(f"variant must be 'tilde' or 'bar', got {variant!r}")
    return table_braiding(table, P.dim, P.field)


def n_rack_shape(P: NParams, c: MonomialBraiding) -> bool:
    """True when c has underlying solution (a, b) -> (2a - b mod 2n+1, a)."""
    size = P.dim
    return c.solution.transport(residue_labels(size, size)) == rack_to_solution(dihedral_rack(size))


def n_verdict(P: NParams) -> FamilyVerdict:
    return open_problem("N", P.as_dict(), f"D_{P.dim} rack type: dimension not determined")
