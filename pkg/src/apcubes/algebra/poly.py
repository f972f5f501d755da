"""Sparse multivariate polynomials over an exact coefficient ring.

Coefficients are any objects supporting ``+``, ``*`` and truthiness for zero
(``Fraction``, ``int``, :class:`~apcubes.algebra.field.CubicFieldElement`).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class Poly:
    __slots__ = ("gens", "terms")

    def __init__(self, gens: Iterable[str], terms: Mapping[tuple[int, ...], object] | None = None):
        self.gens = tuple(gens)
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    # construction

    @classmethod
    def const(cls, c, gens) -> Poly:
        gens = tuple(gens)
        return cls(gens, {(0,) * len(gens): c})

    @classmethod
    def gen(cls, name: str, gens) -> Poly:
        gens = tuple(gens)
        e = tuple(int(g == name) for g in gens)
        if sum(e) != 1:
            raise ValueError(f"{name!r} not among {gens}")
        return cls(gens, {e: Fraction(1)})

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.gens != self.gens:
                raise ValueError(f"generator mismatch: {self.gens} vs {other.gens}")
            return other
        return Poly.const(other, self.gens)

    # arithmetic

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return Poly(self.gens, out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.gens, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Poly:
        return self._coerce(other) - self

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            return Poly(self.gens, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        out: dict[tuple[int, ...], object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return Poly(self.gens, out)

    def __rmul__(self, other) -> Poly:
        return Poly(self.gens, {e: other * c for e, c in self.terms.items()})

    def __truediv__(self, scalar) -> Poly:
        if isinstance(scalar, Poly):
            q, r = self.divmod(scalar)
            if r:
                raise ArithmeticError("division is not exact")
            return q
        if isinstance(scalar, int):
            scalar = Fraction(scalar)
        return self * (1 / scalar)

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power")
        result = Poly.const(Fraction(1), self.gens)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly) and not isinstance(other, (int, Fraction)) and not hasattr(other, "c0"):
            return NotImplemented
        return not (self - other)

    __hash__ = None

    # inspection

    def coefficient(self, **powers: int):
        e = tuple(powers.get(g, 0) for g in self.gens)
        return self.terms.get(e, 0)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, degree: int) -> bool:
        return all(sum(e) == degree for e in self.terms)

    def leading(self) -> tuple[tuple[int, ...], object]:
        e = max(self.terms)
        return e, self.terms[e]

    def map_coefficients(self, fn) -> Poly:
        return Poly(self.gens, {e: fn(c) for e, c in self.terms.items()})

    def __call__(self, *values, **named):
        if named:
            values = tuple(named[g] for g in self.gens)
        if len(values) != len(self.gens):
            raise ValueError(f"expected {len(self.gens)} values")
        total = 0
        for e, c in self.terms.items():
            t = c
            for v, p in zip(values, e):
                if p:
                    t = t * v**p
            total = total + t
        return total

    def subs(self, **images) -> Poly:
        """Substitute polynomials (over any common generators) for named generators."""
        target = None
        for img in images.values():
            if isinstance(img, Poly):
                target = img.gens
                break
        if target is None:
            target = self.gens
        pieces = []
        for g in self.gens:
            img = images.get(g)
            if img is None:
                img = Poly.gen(g, target)
            elif not isinstance(img, Poly):
                img = Poly.const(img, target)
            pieces.append(img)
        out = Poly(target)
        power_cache: dict[tuple[int, int], Poly] = {}
        for e, c in self.terms.items():
            t = Poly.const(c, target)
            for q, p in enumerate(e):
                if p:
                    if (q, p) not in power_cache:
                        power_cache[(q, p)] = pieces[q] ** p
                    t = t * power_cache[(q, p)]
            out = out + t
        return out

    def divmod(self, divisor: Poly) -> tuple[Poly, Poly]:
        """Multivariate division by lex leading terms over a coefficient field."""
        divisor = self._coerce(divisor)
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        le, lc = divisor.leading()
        inv = 1 / lc if not isinstance(lc, int) else Fraction(1, lc)
        quotient = Poly(self.gens)
        remainder = Poly(self.gens)
        p = self
        while p:
            e, c = p.leading()
            if all(a >= b for a, b in zip(e, le)):
                mono = Poly(self.gens, {tuple(a - b for a, b in zip(e, le)): c * inv})
                quotient = quotient + mono
                p = p - mono * divisor
            else:
                lead = Poly(self.gens, {e: c})
                remainder = remainder + lead
                p = p - lead
        return quotient, remainder

    def proportionality(self, other: Poly):
        """The scalar ``c`` with ``self == c * other``, or ``None``."""
        other = self._coerce(other)
        if not other:
            return None if self else 0
        e, oc = other.leading()
        c = self.terms.get(e, 0)
        if not c:
            return None
        c = c * (1 / oc if not isinstance(oc, int) else Fraction(1, oc))
        return c if not (self - other * c) else None

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(g if p == 1 else f"{g}**{p}" for g, p in zip(self.gens, e) if p)
            coef = f"({c})"
            parts.append(f"{coef}*{mono}" if mono else coef)
        return " + ".join(parts)


def polys(*names: str) -> tuple[Poly, ...]:
    """Generators of the polynomial ring in ``names``."""
    return tuple(Poly.gen(n, names) for n in names)
