"""
The 2n-dimensional K family over Q(omega), omega a primitive 8nN-th root of unity.

With m = mu*K, K = omega^(8nk), J = omega^(2jN) and r, d, e, f from
b + 2a - 2 = 2nr + d and 2n + 1 - b + 2a - 2 = 2ne + f (d, f in [0, 2n-1]):

    c(w_a (x) w_b) = (-1)^p m^s w_b (x) w_1                                  a = 1
                   = (-1)^p lam^r m^(s+n(r-2)) J^(n(r-2)) w_2n (x) w_(2n-a+2)  a+b even, d = 0
                   = (-1)^p lam^(r+1) m^(s+n(r-1)) J^(n(r-1)) w_d (x) ...      a+b even, d > 0
                   = (-1)^p lam^e m^(s-ne-2+2a) J^(-ne) w_1 (x) ...            a+b odd,  f = 0
                   = (-1)^p lam^(e+1) m^(s-n(e+1)-2+2a) J^(-n(e+1)) w_(2n+1-f) (x) ...

Indices are 1-based throughout this module.
"""

from dataclasses import dataclass

from algebra.cyclo import CycloField, RootExpr, make_field
from algebra.exactla import MonomialOperator
from braided.braiding import MonomialBraiding, TwistPair, restrict, twist_conjugate
from braided.diagonal import DiagonalProfile, diagonal_profile, dynkin_type
from braided.solutions import dihedral_rack, rack_to_solution, residue_labels
from families.cases import Case, CaseTable, require, sign, table_braiding
from families.verdict import FamilyVerdict, finite, infinite


@dataclass(frozen=True)
class KParams:
    N: int
    n: int
    j: int
    k: int
    p: int
    s: int
    mu: int = 1
    lam: int = 1

    def __post_init__(self):
        require(self.N >= 1, f"N must be >= 1, got {self.N}")
        require(self.n >= 1, f"n must be >= 1, got {self.n}")
        require(self.mu in (1, -1), f"mu must be 1 or -1, got {self.mu}")
        require(self.lam in (1, -1), f"lam must be 1 or -1, got {self.lam}")
        allowed = (1, 3) if self.lam == -1 else (2, 4)
        require(self.j in allowed, f"j must be one of {allowed} when lam = {self.lam}, got {self.j}")
        require(0 <= self.k <= self.N - 1, f"k must lie in [0, {self.N - 1}], got {self.k}")
        require(self.p in (0, 1), f"p must be 0 or 1, got {self.p}")
        require(1 <= self.s <= self.N, f"s must lie in [1, {self.N}], got {self.s}")

    @property
    def dim(self) -> int:
        return 2 * self.n

    @property
    def field(self) -> CycloField:
        return make_field(8 * self.n * self.N)

    @property
    def m(self) -> RootExpr:
        """mu-bar K."""
        return RootExpr(self.field, 8 * self.n * self.k, self.mu)

    @property
    def J(self) -> RootExpr:
        return RootExpr(self.field, 2 * self.j * self.N)

    @property
    def q(self) -> RootExpr:
        return self.m ** self.s * sign(self.p)

    def lam_pow(self, e: int) -> int:
        return sign(e) if self.lam == -1 else 1

    def x(self, b: int) -> RootExpr:
        """Twist scalars: x_1 = 1, x_2k = (J^-1 m)^(n-2k+1), x_2k+1 = lam (J m)^(2k-n)."""
        n, m, J = self.n, self.m, self.J
        if b == 1:
            return RootExpr(self.field, 0)
        if b % 2 == 0:
            return (J.inverse() * m) ** (n - b + 1)
        return (J * m) ** (b - 1 - n) * self.lam

    def as_dict(self) -> dict:
        return {"N": self.N, "n": self.n, "j": self.j, "k": self.k, "p": self.p,
                "s": self.s, "mu": self.mu, "lam": self.lam}


def all_k_params(N: int, n: int):
    """Every valid parameter tuple for the given (N, n)."""
    for lam in (1, -1):
        for j in ((2, 4) if lam == 1 else (1, 3)):
            for mu in (1, -1):
                for k in range(N):
                    for p in (0, 1):
                        for s in range(1, N + 1):
                            yield KParams(N, n, j, k, p, s, mu, lam)


def _rd(P: KParams, a: int, b: int) -> tuple[int, int]:
    return divmod(b + 2 * a - 2, 2 * P.n)


def _ef(P: KParams, a: int, b: int) -> tuple[int, int]:
    return divmod(2 * P.n + 1 - b + 2 * a - 2, 2 * P.n)


def k_table(P: KParams) -> CaseTable:
    n, m, J, lam_pow, s = P.n, P.m, P.J, P.lam_pow, P.s
    base = sign(P.p)
    even = lambda a, b: (a + b) % 2 == 0

    def d_zero(a, b):
        r, _ = _rd(P, a, b)
        return (m ** (s + n * (r - 2)) * J ** (n * (r - 2)) * base * lam_pow(r),
                2 * n, 2 * n - a + 2)

    def d_pos(a, b):
        r, d = _rd(P, a, b)
        return (m ** (s + n * (r - 1)) * J ** (n * (r - 1)) * base * lam_pow(r + 1),
                d, 2 * n - a + 2)

    def f_zero(a, b):
        e, _ = _ef(P, a, b)
        return (m ** (s - n * e - 2 + 2 * a) * J ** (-n * e) * base * lam_pow(e),
                1, 2 * n - a + 2)

    def f_pos(a, b):
        e, f = _ef(P, a, b)
        return (m ** (s - n * (e + 1) - 2 + 2 * a) * J ** (-n * (e + 1)) * base * lam_pow(e + 1),
                2 * n + 1 - f, 2 * n - a + 2)

    return CaseTable("K braiding", [
        Case("a = 1", lambda a, b: a == 1, lambda a, b: (m ** s * base, b, 1)),
        Case("a+b even, d = 0", lambda a, b: a > 1 and even(a, b) and _rd(P, a, b)[1] == 0, d_zero),
        Case("a+b even, d > 0", lambda a, b: a > 1 and even(a, b) and _rd(P, a, b)[1] > 0, d_pos),
        Case("a+b odd, f = 0", lambda a, b: a > 1 and not even(a, b) and _ef(P, a, b)[1] == 0, f_zero),
        Case("a+b odd, f > 0", lambda a, b: a > 1 and not even(a, b) and _ef(P, a, b)[1] > 0, f_pos),
    ])


def k_braiding(P: KParams) -> MonomialBraiding:
    return table_braiding(k_table(P), P.dim, P.field)


def k_twist(P: KParams) -> TwistPair:
    """
    phi1(w_b) = x_b w_(2n+2-b) for odd b != 1, x_b w_b otherwise;
    phi2(w_a) = w_(2n+2-a) for even a, w_a otherwise.
    """
    n, F = P.n, P.field
    labels = range(1, 2 * n + 1)
    phi1 = MonomialOperator(
        [(2 * n + 2 - b if b % 2 and b != 1 else b) - 1 for b in labels],
        [P.x(b).to_cyclo() for b in labels], F)
    phi2 = MonomialOperator.permutation(
        [(2 * n + 2 - a if a % 2 == 0 else a) - 1 for a in labels], F)
    return TwistPair(phi1, phi2)


# ---------------------------------------------------------------------------
# Conjugated tables
# ---------------------------------------------------------------------------

def _bar_table(P: KParams) -> CaseTable:
    n, m, J, lam_pow, s, x = P.n, P.m, P.J, P.lam_pow, P.s, P.x
    base = sign(P.p)

    def psi_e(a, b):
        if a % 2 == 0 and b % 2 == 0:
            return 4 * n + 2 + b - 2 * a
        if b == 1:
            return 2 * a - 1
        return 2 * n + 2 * a - b

    def psi_o(a, b):
        if a % 2 == 0 and b == 1:
            return 6 * n + 2 - 2 * a
        if a % 2 == 0:
            return 4 * n + 1 + b - 2 * a
        return 2 * n - 1 + 2 * a - b

    def rd(a, b):
        return divmod(psi_e(a, b), 2 * n)

    def ef(a, b):
        return divmod(psi_o(a, b), 2 * n)

    def even_case(a, b):
        r, d = rd(a, b)
        ratio = x(b) * x(a).inverse()
        if d == 0:
            return ratio * m ** (s + n * (r - 2)) * J ** (n * (r - 2)) * base * lam_pow(r), 2, a
        coeff = ratio * m ** (s + n * (r - 1)) * J ** (n * (r - 1)) * base * lam_pow(r + 1)
        return coeff, (2 * n + 2 - d if d % 2 == 0 else d), a

    def odd_case(a, b):
        e, f = ef(a, b)
        if f == 0:
            coeff = x(b) * x(a).inverse() * m ** (s + n * (4 - e) + 2 - 2 * a) * J ** (-n * e) * base * lam_pow(e)
            return coeff, 1, a
        tail = (x(a) * J ** (n * (e + 1))).inverse() * x(b) * base * lam_pow(e + 1)
        if f % 2 == 0:
            return tail * m ** (s + n * (3 - e) + 2 - 2 * a), 2 * n + 1 - f, a
        return tail * m ** (s - n * (e + 1) - 2 + 2 * a), 1 + f, a

    def first_row(a, b):
        if b == 1:
            return m ** s * base, 1, 1
        return x(b) * x(1).inverse() * m ** s * base, 2 * n + 2 - b, 1

    return CaseTable("K bar", [
        Case("(1) a = 1", lambda a, b: a == 1, first_row),
        Case("(2) a != 1, a+b even", lambda a, b: a != 1 and (a + b) % 2 == 0, even_case),
        Case("(3) a != 1, a+b odd", lambda a, b: a != 1 and (a + b) % 2 == 1, odd_case),
    ])


def _tilde_table(P: KParams) -> CaseTable:
    n, m, J, lam_pow, s, x = P.n, P.m, P.J, P.lam_pow, P.s, P.x
    base = sign(P.p)

    def rd(a, b):
        psi = 2 * n + 2 * a - b if a % 2 == 0 else 4 * n + 2 + b - 2 * a
        return divmod(psi, 2 * n)

    def ef(a, b):
        psi = 2 * n - 1 + 2 * a - b if a % 2 == 0 else 4 * n + 1 + b - 2 * a
        return divmod(psi, 2 * n)

    def even_case(a, b):
        r, d = rd(a, b)
        if d == 0:
            coeff = x(a) * x(2 * n).inverse() * m ** (s + n * (r - 2)) * J ** (n * (r - 2)) * base * lam_pow(r)
            return coeff, 2 * n, a
        if d % 2 == 0:
            g = d
        elif d == 1:
            g = 1
        else:
            g = 2 * n + 2 - d
        coeff = x(a) * x(g).inverse() * m ** (s + n * (r - 1)) * J ** (n * (r - 1)) * base * lam_pow(r + 1)
        return coeff, g, a

    def odd_case(a, b):
        e, f = ef(a, b)
        if f == 0:
            coeff = x(a) * x(1).inverse() * m ** (s - n * e + 2 * a - 2) * J ** (-n * e) * base * lam_pow(e)
            return coeff, 1, a
        if f % 2 == 0:
            g, power = f + 1, s - n * (e + 1) + 2 * a - 2
        else:
            g, power = 2 * n + 1 - f, s + n * (3 - e) - 2 * a + 2
        coeff = x(a) * (x(g) * J ** (n * (e + 1))).inverse() * m ** power * base * lam_pow(e + 1)
        return coeff, g, a

    def first_row(a, b):
        if b == 1:
            return m ** s * base, 1, 1
        return x(1) * x(2 * n + 2 - b).inverse() * m ** s * base, 2 * n + 2 - b, 1

    return CaseTable("K tilde", [
        Case("(1) a = 1", lambda a, b: a == 1, first_row),
        Case("(2) a != 1, a+b even", lambda a, b: a != 1 and (a + b) % 2 == 0, even_case),
        Case("(3) a != 1, a+b odd", lambda a, b: a != 1 and (a + b) % 2 == 1, odd_case),
    ])


def k_closed_form(P: KParams, variant: str) -> MonomialBraiding:
    """The conjugated braiding written down directly, variant "bar" or "tilde"."""
    if variant == "bar":
        table = _bar_table(P)
    elif variant == "tilde":
        table = _tilde_table(P)
    else:
        raise ValueError(f"variant must be 'bar' or 'tilde', got {variant!r}")
    return table_braiding(table, P.dim, P.field)


def k_rack_shape(P: KParams, c: MonomialBraiding) -> bool:
    """True when c has underlying solution (a, b) -> (2a - b mod 2n, a)."""
    size = P.dim
    moved = c.solution.transport(residue_labels(size, size))
    return moved == rack_to_solution(dihedral_rack(size))


def k_profile(P: KParams) -> list[DiagonalProfile]:
    """
    Diagonal pieces: for n = 1 the braiding itself, with data (q, lam q^2, q);
    for n = 2 the spans of (w1, w3) and (w2, w4) in the conjugated braiding,
    each with data (q, q^2, q). Empty for n > 2.
    """
    if P.n == 1:
        return [diagonal_profile(k_braiding(P))]
    if P.n == 2:
        bar = twist_conjugate(k_braiding(P), k_twist(P)).bar
        return [diagonal_profile(restrict(bar, idx)) for idx in ((0, 2), (1, 3))]
    return []


def k_verdict(P: KParams) -> FamilyVerdict:
    q = P.q.to_cyclo()
    lam = P.lam
    tag, params = "K", P.as_dict()
    if P.n == 1:
        ct = dynkin_type((q, q * q * lam, q))
        if not q.is_one() and (q * q * lam).is_one() and ct is not None:
            return finite(tag, params, ct.dimension, ct.name, "n = 1: lam q^2 = 1 != q")
        if not q.is_one() and (q * q * q * lam).is_one() and ct is not None:
            return finite(tag, params, ct.dimension, ct.name, "n = 1: lam q^3 = 1 != q")
        return infinite(tag, params, "n = 1: neither lam q^2 = 1 != q nor lam q^3 = 1 != q")
    if P.n == 2:
        if q == -1 and lam == 1:
            return finite(tag, params, 64, "A2xA2", "n = 2: q = -1 and lam = 1")
        return infinite(tag, params, "n = 2: not (q = -1 and lam = 1)")
    return infinite(tag, params, "n > 2: D_2n rack type")
