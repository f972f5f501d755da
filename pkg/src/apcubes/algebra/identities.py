"""Exact polynomial identities behind the descents and the cubic-field argument.

Each verifier expands both sides symbolically and returns the factor relating
them; an :class:`IdentityError` means a transcription error in a constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .field import ALPHA, C1, C2, C3, D1, D2, D3, EPS0, P3, RHO, SIGMA, CubicFieldElement
from .poly import Poly, polys


class IdentityError(ArithmeticError):
    pass


def _proportional(lhs: Poly, rhs: Poly, what: str):
    c = lhs.proportionality(rhs)
    if c is None or not c:
        raise IdentityError(f"{what}: expansion is not a constant multiple of the target")
    return c


def bennett_identity() -> Poly:
    """(x+1)^2 (x+4) - x (x+3)^2, which must be the constant 4."""
    (x,) = polys("x")
    p = (x + 1) ** 2 * (x + 4) - x * (x + 3) ** 2
    if p != 4:
        raise IdentityError(f"Bennett identity fails: {p}")
    return p


def verify_descent_identity_D(D: int) -> Fraction:
    """c with (X+Y)^3 (G^2 - F^3 + 432 D^2) = c (X^3 + Y^3 + D U^3),

    where F = -12 D U / (X+Y) and G = 36 D (X-Y) / (X+Y).
    """
    if D < 1:
        raise ValueError("D must be positive")
    X, Y, U = polys("X", "Y", "U")
    s = X + Y
    F_num = -12 * D * U  # F = F_num / s
    G_num = 36 * D * (X - Y)  # G = G_num / s
    lhs = G_num**2 * s - F_num**3 + 432 * D**2 * s**3
    return _proportional(lhs, X**3 + Y**3 + D * U**3, f"descent identity D={D}")


def verify_descent_identity_27() -> Fraction:
    """c with (x+y)^3 (G^2 - F^3 + 27) = c (x^3 + y^3 + 2 z^3),

    where F = -6 z / (x+y) and G = 9 (x-y) / (x+y).
    """
    x, y, z = polys("x", "y", "z")
    s = x + y
    lhs = (9 * (x - y)) ** 2 * s - (-6 * z) ** 3 + 27 * s**3
    return _proportional(lhs, x**3 + y**3 + 2 * z**3, "descent identity for x^3+y^3+2z^3")


@dataclass(frozen=True)
class RationalCofactor:
    """``numerator / denominator`` as polynomials in a, b, f, x, y, z."""

    numerator: Poly
    denominator: Poly

    def __call__(self, **values) -> Fraction:
        return Fraction(self.numerator(**values)) / Fraction(self.denominator(**values))


def verify_descent_identity_D1() -> RationalCofactor:
    """Cofactor of G^2 + G - F^3 by a x^3 + b y^3 + c z^3 with c = f^3/(ab),

    where F = -a b x y / (f^2 z^2), G = -1/2 - a b (a x^3 - b y^3) / (2 f^3 z^3).
    """
    a, b, f, x, y, z = polys("a", "b", "f", "x", "y", "z")
    F_num, F_den = -a * b * x * y, f**2 * z**2
    G_num, G_den = -(f**3 * z**3) - a * b * (a * x**3 - b * y**3), 2 * f**3 * z**3
    # (G^2 + G - F^3) * G_den^2 ; note G_den^2 = 4 F_den^3
    N = G_num**2 + G_num * G_den - 4 * F_num**3
    # a b (a x^3 + b y^3 + c z^3) with c = f^3 / (ab)
    Q = a * b * (a * x**3 + b * y**3) + f**3 * z**3
    quotient, remainder = N.divmod(Q)
    if remainder:
        raise IdentityError("G^2 + G - F^3 is not divisible by a x^3 + b y^3 + c z^3")
    # G^2+G-F^3 = (N/Q) * Q / G_den^2 = form * (a b * quotient) / G_den^2
    return RationalCofactor(a * b * quotient, G_den**2)


def expand_unit_power_product(b: int) -> tuple[Poly, Poly, Poly]:
    """Coordinates of (2 - alpha) eps0^b (f + g alpha + h alpha^2)^3 in f, g, h."""
    if b not in (0, 1, 2):
        raise ValueError("b must be 0, 1 or 2")
    f, g, h = polys("f", "g", "h")
    v = CubicFieldElement(f, g, h)
    w = (P3 * EPS0**b) * v**3
    return w.coords


def all_coefficients_divisible(p: Poly, m: int) -> bool:
    return all(Fraction(c).denominator == 1 and Fraction(c).numerator % m == 0 for c in p.terms.values())


@dataclass(frozen=True)
class WeierstrassCheck:
    scale: CubicFieldElement
    inverse_ok: tuple[bool, bool, bool]


def weierstrass_polys() -> tuple[Poly, Poly]:
    """(E evaluated at the substitution, the cubic over K), both in x, y, u."""
    x, y, u = polys("x", "y", "u")
    X = -u * CubicFieldElement(1)
    Y = C1 * x
    Z = C2 * x + C3 * y
    lhs = Y**2 * Z + RHO * Y * Z**2 - X**3 - SIGMA * Z**3
    target = (ALPHA * x - y) * (x**2 - x * y + y**2) - 3 * P3 * u**3
    return lhs, target


def verify_weierstrass_transform() -> WeierstrassCheck:
    lhs, target = weierstrass_polys()
    lam = _proportional(lhs, target, "Weierstrass substitution")
    inverse_ok = (D1 == 1 / C1, D2 == -C2 / (C1 * C3), D3 == 1 / C3)
    if not all(inverse_ok):
        raise IdentityError(f"inverse-map relations fail: {inverse_ok}")
    return WeierstrassCheck(lam, inverse_ok)


# The cubic form printed for the alpha-coordinate when b = 1.
B1_ALPHA_COORDINATE = {
    (3, 0, 0): -9, (2, 1, 0): -24, (1, 2, 0): 120, (0, 3, 0): -45, (2, 0, 1): 120,
    (1, 1, 1): -270, (0, 2, 1): -120, (1, 0, 2): -120, (0, 1, 2): 600, (0, 0, 3): -225,
}


def identity_suite() -> list[tuple[str, bool, str]]:
    """Run every check; returns (name, passed, detail) rows."""
    rows: list[tuple[str, bool, str]] = []

    def check(name, fn):
        try:
            detail = fn()
            rows.append((name, True, str(detail)))
        except (IdentityError, AssertionError) as exc:
            rows.append((name, False, str(exc)))

    def b1_form():
        _, alpha_coord, _ = expand_unit_power_product(1)
        got = {e: int(c) for e, c in alpha_coord.terms.items()}
        assert got == B1_ALPHA_COORDINATE, got
        return "matches coefficient by coefficient"

    def divisible(b, coord):
        def run():
            p = expand_unit_power_product(b)[coord]
            assert all_coefficients_divisible(p, 3), p
            return "all coefficients divisible by 3"

        return run

    def p3_cubed():
        assert P3**3 == 3 * EPS0
        return "(2 - alpha)^3 = 3 eps0"

    def d_family():
        consts = {D: verify_descent_identity_D(D) for D in (1, 4, 36, 14700)}
        assert all(c == 1728 * D**2 for D, c in consts.items()), consts
        return "c(D) = 1728 D^2"

    check("bennett identity", lambda: bennett_identity())
    check("descent curve v^2 = u^3 - 432 D^2", d_family)
    check("descent curve v^2 + v = u^3", lambda: verify_descent_identity_D1().numerator.degree())
    check("descent curve v^2 = u^3 - 27", verify_descent_identity_27)
    check("(2 - alpha)^3 = 3 eps0", p3_cubed)
    check("b=1 alpha-coordinate form", b1_form)
    check("b=1 alpha-coordinate divisible by 3", divisible(1, 1))
    check("b=2 1-coordinate divisible by 3", divisible(2, 0))
    check("Weierstrass map and inverse", lambda: verify_weierstrass_transform().scale)
    return rows
