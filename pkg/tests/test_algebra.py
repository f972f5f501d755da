from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from apcubes.algebra.field import ALPHA, C1, C2, C3, D1, D2, D3, EPS0, P3, K, field_inv, field_norm
from apcubes.algebra.identities import (
    B1_ALPHA_COORDINATE,
    all_coefficients_divisible,
    bennett_identity,
    expand_unit_power_product,
    identity_suite,
    verify_descent_identity_27,
    verify_descent_identity_D,
    verify_descent_identity_D1,
    verify_weierstrass_transform,
    weierstrass_polys,
)
from apcubes.algebra.poly import Poly, polys
from apcubes.cubic import RANK_ZERO_LIST

t = sympy.Symbol("t")
MINPOLY = t**3 - 5


def to_sympy(e: K):
    return sum(sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) * t**q for q, c in enumerate(e.coords))


def reduce_mod(expr):
    return sympy.Poly(sympy.rem(sympy.expand(expr), MINPOLY, t), t)


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
elements = st.builds(K, rationals, rationals, rationals)


# --- field arithmetic against sympy's polynomial arithmetic mod t^3 - 5 ---

@given(elements, elements)
def test_mul_matches_sympy(x, y):
    assert reduce_mod(to_sympy(x * y)) == reduce_mod(to_sympy(x) * to_sympy(y))


@given(elements)
def test_norm_is_resultant(x):
    expected = sympy.resultant(MINPOLY, to_sympy(x) + 0 * t, t)
    assert field_norm(x) == Fraction(str(expected))


@given(elements.filter(bool))
def test_inverse(x):
    assert x * field_inv(x) == K(1)
    assert (x * x.inverse()).coords == (1, 0, 0)


@given(elements, elements)
def test_norm_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        K(0).inverse()


def test_fundamental_unit_norm_via_resultant():
    assert EPS0 == K(1, -4, 2)
    assert sympy.resultant(t**3 - 5, 2 * t**2 - 4 * t + 1, t) == 1
    assert EPS0.norm() == 1 and EPS0.is_unit()


def test_p3_cubed():
    assert P3**3 == 3 * EPS0
    assert P3.norm() == 3
    assert ALPHA**3 == K(5)


# --- polynomial identities ---

def test_bennett():
    assert bennett_identity() == 4


@pytest.mark.parametrize("D", sorted(RANK_ZERO_LIST))
def test_descent_constant_family(D):
    assert verify_descent_identity_D(D) == 1728 * D**2


def test_descent_constant_two():
    assert verify_descent_identity_27() == 108


def test_descent_identity_D1_against_sympy():
    cof = verify_descent_identity_D1()
    a, b, f, x, y, z = sympy.symbols("a b f x y z")
    F = -a * b * x * y / (f**2 * z**2)
    G = -sympy.Rational(1, 2) - a * b * (a * x**3 - b * y**3) / (2 * f**3 * z**3)
    form = a * x**3 + b * y**3 + f**3 / (a * b) * z**3
    expected = sympy.cancel((G**2 + G - F**3) / form)
    assert sympy.simplify(expected - a * b * (a**2 * b * x**3 + a * b**2 * y**3 - f**3 * z**3) / (4 * f**6 * z**6)) == 0
    vals = dict(a=2, b=3, f=5, x=7, y=-1, z=2)
    assert cof(**vals) == Fraction(str(expected.subs(vals)))


def test_b1_alpha_coordinate_matches_table():
    coords = expand_unit_power_product(1)
    alpha_coord = coords[1]
    assert dict(alpha_coord.terms) == B1_ALPHA_COORDINATE


@pytest.mark.parametrize("b, q", [(1, 1), (2, 0)])
def test_divisibility_by_three(b, q):
    assert all_coefficients_divisible(expand_unit_power_product(b)[q], 3)


@pytest.mark.parametrize("b, q", [(1, 0), (1, 2), (2, 1), (2, 2)])
def test_other_coordinates_not_divisible(b, q):
    # the divisibility is special to the coordinates that carry the argument
    assert not all_coefficients_divisible(expand_unit_power_product(b)[q], 3)


def test_b1_alpha_coordinate_not_divisible():
    assert not all_coefficients_divisible(expand_unit_power_product(1)[1] + 1, 3)


def test_unit_power_coordinates_against_sympy():
    f, g, h = sympy.symbols("f g h")
    expr = (2 - t) * (1 - 4 * t + 2 * t**2) * (f + g * t + h * t**2) ** 3
    rem = sympy.Poly(sympy.rem(sympy.expand(expr), MINPOLY, t), t)
    ours = expand_unit_power_product(1)
    for q in range(3):
        want = sympy.Poly(rem.coeff_monomial(t**q), f, g, h)
        got = {m: int(c) for m, c in ours[q].terms.items()}
        assert got == {m: int(c) for m, c in want.terms()}


def test_weierstrass():
    check = verify_weierstrass_transform()
    assert check.scale == K(Fraction(-4, 9), Fraction(-2, 9), Fraction(-1, 9))
    assert check.inverse_ok == (True, True, True)
    lhs, target = weierstrass_polys()
    assert lhs == target * check.scale
    assert D1 * C1 == K(1) and D3 * C3 == K(1) and D2 == -C2 / (C1 * C3)


def test_identity_suite_all_pass():
    rows = identity_suite()
    assert rows and all(ok for _, ok, _ in rows), rows


# --- Poly ---

def test_poly_divmod_and_proportionality():
    x, y = polys("x", "y")
    p = (x + y) * (x - 2 * y) + 3
    q, r = p.divmod(x + y)
    assert q * (x + y) + r == p and r == 3
    assert (6 * x**2 - 3 * y).proportionality(2 * x**2 - y) == 3
    assert (x + y).proportionality(x - y) is None


polys_st = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-9, 9), max_size=6
).map(lambda d: Poly(("x", "y"), d))


@given(polys_st, polys_st, st.integers(-5, 5), st.integers(-5, 5))
def test_poly_ring_homomorphism(p, q, xv, yv):
    assert (p * q)(x=xv, y=yv) == p(x=xv, y=yv) * q(x=xv, y=yv)
    assert (p - q)(x=xv, y=yv) == p(x=xv, y=yv) - q(x=xv, y=yv)


@given(polys_st, polys_st)
def test_poly_product_against_sympy(p, q):
    x, y = sympy.symbols("x y")

    def s(P):
        return sympy.Poly(sum(c * x**m[0] * y**m[1] for m, c in P.terms.items()) + 0 * x, x, y)

    assert s(p * q) == s(p) * s(q)
