"""
The two-dimensional braided vector spaces V_abe:

    c(v1 (x) v1) = a v2 (x) v2,    c(v1 (x) v2) = b v1 (x) v2,
    c(v2 (x) v1) = b v2 (x) v1,    c(v2 (x) v2) = e v1 (x) v1.

Rescaling v1 by a fourth root of e/a gives V_{g,b,g} with g^2 = ae, and the
swap twist in one slot turns that into a diagonal braiding with Dynkin data
(b, ae, b).
"""

from dataclasses import dataclass

from algebra.cyclo import CycloNum, NotARootError, common_field, is_primitive_root, make_field
from algebra.exactla import MonomialOperator
from braided.braiding import MonomialBraiding, TwistPair, twist_conjugate
from braided.diagonal import diagonal_profile, dynkin_type
from families.cases import ParameterError
from families.verdict import FamilyVerdict, finite, infinite
from utils.literals import format_literal


@dataclass(frozen=True)
class VAbeParams:
    a: CycloNum
    b: CycloNum
    e: CycloNum

    def __post_init__(self):
        for name in ("a", "b", "e"):
            if getattr(self, name).is_zero():
                raise ParameterError(f"V_abe parameter {name} must be nonzero")
        field = common_field(self.a.field.order, self.b.field.order, self.e.field.order)
        for name in ("a", "b", "e"):
            object.__setattr__(self, name, getattr(self, name).embed(field))

    @property
    def field(self):
        return self.a.field

    def as_dict(self) -> dict:
        return {"a": format_literal(self.a), "b": format_literal(self.b), "e": format_literal(self.e)}


def _abe_braiding(a: CycloNum, b: CycloNum, e: CycloNum) -> MonomialBraiding:
    table = {
        (0, 0): (a, 1, 1),
        (0, 1): (b, 0, 1),
        (1, 0): (b, 1, 0),
        (1, 1): (e, 0, 0),
    }
    return MonomialBraiding.from_rule(2, a.field, lambda i, j: table[i, j])


def v_abe(params: VAbeParams) -> MonomialBraiding:
    return _abe_braiding(params.a, params.b, params.e)


@dataclass(frozen=True)
class VAbeDiagonalForm:
    iso_form: MonomialBraiding
    diagonal: MonomialBraiding
    sqrt_ae: CycloNum
    rescale: CycloNum
    twist: TwistPair


def v_abe_diagonalize(params: VAbeParams) -> VAbeDiagonalForm:
    """
    w1 = s v1 with s^4 = e/a, w2 = v2. In the basis (w1, w2) the braiding is
    V_{g,b,g} with g = a s^2; the swap twist then gives the diagonal form.

    Raises:
        NotARootError: when e/a is not a root of unity of the ambient field
    """
    ratio = (params.e / params.a).as_root()
    if ratio is None:
        raise NotARootError(
            f"e/a = {params.e / params.a} is not a root of unity in {params.field}; "
            f"pass a and e as zM^k literals (enlarge the field)"
        )
    L, t = ratio.pure_power()
    field = common_field(params.field.order, 4 * L)
    s = make_field(4 * L).power(t).embed(field)
    a, b, e = (x.embed(field) for x in (params.a, params.b, params.e))
    g = a * s * s

    iso = _abe_braiding(g, b, g)
    swap = MonomialOperator.permutation([1, 0], field)
    twist = TwistPair(swap, MonomialOperator.identity(2, field))
    result = twist_conjugate(iso, twist)
    return VAbeDiagonalForm(iso, result.tilde, g, s, twist)


def v_abe_verdict(params: VAbeParams) -> FamilyVerdict:
    """
    27 if ae = b^2 and b^3 = 1 != b; 4m if b = -1 and ae in G_m (m >= 2);
    m^2 if ae = 1 and b in G_m (m >= 2); infinite otherwise.
    """
    a, b, e = params.a, params.b, params.e
    ae = a * e
    tag, p = "Vabe", params.as_dict()
    diag = (b, ae, b)

    def type_name():
        ct = dynkin_type(diag)
        return ct.name if ct else None

    if ae == b * b and is_primitive_root(b, 3):
        return finite(tag, p, 27, type_name(), "27: ae = b^2, b^3 = 1 != b")
    if b == -1:
        m = ae.root_order()
        if m is not None and m >= 2:
            return finite(tag, p, 4 * m, type_name(), f"4m: b = -1, ae in G_{m}")
    if ae.is_one():
        m = b.root_order()
        if m is not None and m >= 2:
            return finite(tag, p, m * m, type_name(), f"m^2: ae = 1, b in G_{m}")
    return infinite(tag, p, "infinite: none of the finite branches applies")


def v_abe_profile(params: VAbeParams):
    """Diagonal profile of the twisted form."""
    return diagonal_profile(v_abe_diagonalize(params).diagonal)
