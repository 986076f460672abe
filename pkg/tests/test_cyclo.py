from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.cyclo import (
    EmbeddingError,
    FieldMismatchError,
    RootExpr,
    common_field,
    cyclotomic_poly,
    embed,
    is_primitive_root,
    make_field,
    root_power,
)

X = sympy.symbols("x")

coeff = st.one_of(st.integers(-6, 6), st.fractions(min_value=-3, max_value=3, max_denominator=4))

# products reach degree 2*phi(M) - 2, which is >= M for 5, 7, 9 and 15
ORDERS = [1, 4, 5, 7, 9, 12, 15]


def field_elements(field, count):
    element = st.lists(coeff, min_size=field.degree, max_size=field.degree).map(field.element)
    return st.tuples(*[element] * count)


elements_in_some_field = st.sampled_from(ORDERS).map(make_field).flatmap(lambda f: field_elements(f, 3))


class TestCyclotomicPolynomial:
    @pytest.mark.parametrize("order,expected", [
        (1, (-1, 1)),
        (4, (1, 0, 1)),
        (6, (1, -1, 1)),
    ])
    def test_small_orders(self, order, expected):
        assert cyclotomic_poly(order) == expected

    @pytest.mark.parametrize("order", range(1, 61))
    def test_matches_sympy(self, order):
        oracle = sympy.Poly(sympy.cyclotomic_poly(order, X), X).all_coeffs()
        assert list(cyclotomic_poly(order)) == [int(c) for c in reversed(oracle)]

    def test_degree_is_totient(self):
        for order in (8, 15, 24, 40):
            assert make_field(order).degree == sympy.totient(order)

    def test_zero_order_rejected(self):
        with pytest.raises(ValueError):
            make_field(0)


class TestArithmetic:
    def test_zeta4_squared(self):
        z = make_field(4).gen()
        assert z * z == -1

    def test_inverse_of_generator(self):
        field = make_field(7)
        assert 1 / field.gen() == field.power(6)

    def test_cancellation(self):
        z = make_field(3).gen()
        assert (1 + z) + (-z) == 1

    def test_rational_division(self):
        field = make_field(5)
        x = field.from_rational(Fraction(3, 2))
        assert x / 3 == Fraction(1, 2)

    def test_division_by_zero(self):
        field = make_field(5)
        with pytest.raises(ZeroDivisionError):
            field.one() / field.zero()

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatchError):
            make_field(3).gen() + make_field(4).gen()

    def test_negative_powers(self):
        z = make_field(9).gen()
        assert z ** -2 == z ** 7
        assert z ** 9 == 1

    @pytest.mark.parametrize("order", [5, 7, 9, 25, 27])
    def test_product_past_the_order(self, order):
        field = make_field(order)
        top = field.power(order - 1)
        assert top * top == field.power(order - 2)
        assert top * field.gen() == 1

    def test_root_power_reduces_exponent(self):
        field = make_field(8)
        assert root_power(field, 11) == root_power(field, 3)
        assert root_power(field, -1) == field.power(7)


@settings(max_examples=60, deadline=None)
@given(elements_in_some_field)
def test_field_axioms(xyz):
    x, y, z = xyz
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x - x == 0


@settings(max_examples=60, deadline=None)
@given(elements_in_some_field)
def test_inverse(xyz):
    x = xyz[0]
    if x.is_zero():
        with pytest.raises(ZeroDivisionError):
            x.inverse()
    else:
        assert (x * x.inverse()).is_one()


class TestRoots:
    def test_as_root(self):
        field = make_field(3)
        assert (-field.gen()).as_root() == RootExpr(field, 1, -1)
        assert (field.one() + field.one()).as_root() is None

    def test_root_order(self):
        field = make_field(3)
        assert field.gen().root_order() == 3
        assert (-field.gen()).root_order() == 6
        assert field.from_rational(2).root_order() is None

    def test_primitive(self):
        field = make_field(12)
        assert is_primitive_root(field.gen(), 12)
        assert is_primitive_root(field.power(4), 3)
        assert not is_primitive_root(field.power(4), 6)
        assert not is_primitive_root(field.one(), 3)

    def test_embedding(self):
        z3 = make_field(3).gen()
        assert embed(z3, make_field(6)) == make_field(6).power(2)
        with pytest.raises(EmbeddingError):
            embed(z3, make_field(4))

    def test_common_field(self):
        assert common_field(4, 6).order == 12


class TestRootExpr:
    def test_sign_absorbed_for_even_order(self):
        field = make_field(8)
        assert RootExpr(field, 1, -1) == RootExpr(field, 5)

    def test_odd_order_keeps_sign(self):
        field = make_field(3)
        r = RootExpr(field, 4, -1)
        assert (r.exponent, r.sign) == (1, -1)
        assert r.order() == 6

    def test_products_match_cyclo(self):
        field = make_field(16)
        a, b = RootExpr(field, 3), RootExpr(field, 7, -1)
        assert (a * b).to_cyclo() == a.to_cyclo() * b.to_cyclo()
        assert (a ** -3).to_cyclo() == a.to_cyclo() ** -3
        assert (a * -1).to_cyclo() == -a.to_cyclo()
        assert (a * a.inverse()).to_cyclo().is_one()

    def test_embed(self):
        r = RootExpr(make_field(3), 1, -1)
        target = make_field(12)
        assert r.embed(target).to_cyclo() == embed(r.to_cyclo(), target)

    def test_invalid_sign(self):
        with pytest.raises(ValueError):
            RootExpr(make_field(3), 1, 2)
