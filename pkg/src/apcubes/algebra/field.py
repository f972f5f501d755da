"""Exact arithmetic in K = Q(alpha), alpha^3 = 5, on the basis 1, alpha, alpha^2."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

M = 5  # alpha**3


def _q(x):
    return Fraction(x) if isinstance(x, (int, Rational)) else x


class CubicFieldElement:
    """``c0 + c1*alpha + c2*alpha^2``.

    Coordinates are usually ``Fraction``; polynomial coordinates also work,
    which lets a symbolic element such as ``f + g*alpha + h*alpha^2`` be
    cubed and read off coordinate by coordinate.
    """

    __slots__ = ("c0", "c1", "c2")

    def __init__(self, c0=0, c1=0, c2=0):
        self.c0, self.c1, self.c2 = _q(c0), _q(c1), _q(c2)

    @property
    def coords(self) -> tuple:
        return (self.c0, self.c1, self.c2)

    @classmethod
    def _lift(cls, x):
        if isinstance(x, CubicFieldElement):
            return x
        if isinstance(x, (int, Rational)):
            return cls(x)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return CubicFieldElement(self.c0 + o.c0, self.c1 + o.c1, self.c2 + o.c2)

    __radd__ = __add__

    def __neg__(self):
        return CubicFieldElement(-self.c0, -self.c1, -self.c2)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a0, a1, a2 = self.coords
        b0, b1, b2 = o.coords
        return CubicFieldElement(
            a0 * b0 + M * (a1 * b2 + a2 * b1),
            a0 * b1 + a1 * b0 + M * a2 * b2,
            a0 * b2 + a1 * b1 + a2 * b0,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CubicFieldElement(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def norm(self):
        a0, a1, a2 = self.coords
        return a0**3 + M * a1**3 + M * M * a2**3 - 3 * M * a0 * a1 * a2

    def trace(self):
        return 3 * self.c0

    def inverse(self) -> CubicFieldElement:
        N = self.norm()
        if not N:
            raise ZeroDivisionError("inverse of zero in Q(5^(1/3))")
        a0, a1, a2 = self.coords
        return CubicFieldElement(
            (a0 * a0 - M * a1 * a2) / N,
            (M * a2 * a2 - a0 * a1) / N,
            (a1 * a1 - a0 * a2) / N,
        )

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def is_integral(self) -> bool:
        """Membership in Z[alpha], the full ring of integers here."""
        return all(isinstance(c, Rational) and c.denominator == 1 for c in self.coords)

    def is_unit(self) -> bool:
        return self.is_integral() and abs(self.norm()) == 1

    def __bool__(self) -> bool:
        return bool(self.c0) or bool(self.c1) or bool(self.c2)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return not (self - o)

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"K({self.c0}, {self.c1}, {self.c2})"


def field_mul(x: CubicFieldElement, y: CubicFieldElement) -> CubicFieldElement:
    return x * y


def field_inv(x: CubicFieldElement) -> CubicFieldElement:
    return x.inverse()


def field_norm(x: CubicFieldElement):
    return x.norm()


K = CubicFieldElement
F = Fraction

ALPHA = K(0, 1, 0)
EPS0 = K(1, -4, 2)  # fundamental unit
P3 = K(2, -1, 0)  # prime above 3; P3**3 == 3 * EPS0
P5 = ALPHA  # prime above 5

# Weierstrass model Y^2 Z + RHO Y Z^2 = X^3 + SIGMA Z^3 of
# (alpha x - y)(x^2 - x y + y^2) = 3 (2 - alpha) u^3.
RHO = K(F(-99, 5), F(9, 5), F(27, 5))
SIGMA = K(F(-2511, 25), F(-891, 25), F(1377, 25))
C1 = K(1, -1, F(-1, 5))
C2 = K(F(-5, 6), F(-5, 9), F(-5, 18))
C3 = K(F(5, 9), F(5, 18), F(1, 6))
# inverse map (x, y, u) = (D1 Y, D2 Y + D3 Z, -X)
D1 = K(0, F(-1, 6), F(-1, 6))
D2 = K(F(-5, 6), 0, F(-1, 6))
D3 = K(9, F(-9, 5), F(-9, 5))
