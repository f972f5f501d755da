"""Diagonal ternary cubic forms aX^3 + bY^3 + cZ^3 and elimination certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import Any

from .arith import cube_free_part, is_perfect_cube

# Values of D for which v^2 = u^3 - 432 D^2 has rank zero; trusted, not recomputed.
RANK_ZERO_LIST: frozenset[int] = frozenset(
    {
        1, 3, 4, 5, 10, 14, 18, 21, 25, 36, 45, 60, 100, 147, 150,
        175, 196, 225, 245, 252, 300, 315, 350, 882, 980,
        1050, 1470, 1575, 1764, 2940, 7350, 14700,
    }
)


class CertificateKind(str, Enum):
    RANK_ZERO_LIST = "RankZeroList"
    THREE_ONES = "ThreeOnes"
    BENNETT_WINDOW = "BennettWindow"
    MODULAR_SIEVE = "ModularSieve"
    SPECIAL_EQUATION = "SpecialEquation"
    EDGE_CASE_HTT = "EdgeCaseHTT"
    PAIR_OF_CUBICS = "PairOfCubics"


# Kinds whose conclusion rests on an external theorem rather than on local arithmetic.
TRUSTED_KINDS = frozenset(
    {CertificateKind.SPECIAL_EQUATION, CertificateKind.EDGE_CASE_HTT, CertificateKind.PAIR_OF_CUBICS}
)


@dataclass(frozen=True)
class Certificate:
    """Why a coefficient vector was eliminated, or how it was resolved.

    ``witness`` holds plain data (ints, tuples, lists) so the record can be
    serialized and re-checked without re-running the search.
    """

    kind: CertificateKind
    witness: dict[str, Any] = field(default_factory=dict)

    @property
    def trusted(self) -> bool:
        return self.kind in TRUSTED_KINDS


@dataclass(frozen=True)
class TernaryCubic:
    a: int
    b: int
    c: int
    provenance: tuple | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.a == 0 or self.b == 0 or self.c == 0:
            raise ValueError(f"coefficients must be nonzero: {self.coefficients}")

    @property
    def coefficients(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __call__(self, x: int, y: int, z: int) -> int:
        return self.a * x**3 + self.b * y**3 + self.c * z**3

    def normalized(self) -> TernaryCubic:
        """Divide out the content gcd(a, b, c); D is unchanged (it only moves a cube)."""
        g = gcd(gcd(self.a, self.b), self.c)
        return TernaryCubic(self.a // g, self.b // g, self.c // g, self.provenance)

    def __str__(self) -> str:
        parts = []
        for coef, var in zip(self.coefficients, "XYZ"):
            sign = "-" if coef < 0 else "+"
            mag = "" if abs(coef) == 1 else str(abs(coef))
            parts.append(f"{sign} {mag}{var}^3")
        text = " ".join(parts)
        return text[2:] if text.startswith("+") else "-" + text[2:]


def from_triple(vector, triple: tuple[int, int, int]) -> TernaryCubic:
    """The form ((s-t)a_r, (t-r)a_s, (r-s)a_t) satisfied by (x_r, x_s, x_t)."""
    r, s, t = triple
    k, i = vector.k, vector.i
    if len({r, s, t}) != 3:
        raise ValueError(f"indices must be distinct: {triple}")
    for j in triple:
        if j == i or not 0 <= j < k:
            raise ValueError(f"index {j} is not housed for (k, i) = ({k}, {i})")
    return TernaryCubic(
        (s - t) * vector[r],
        (t - r) * vector[s],
        (r - s) * vector[t],
        provenance=(k, i, tuple(vector.entries), triple),
    )


def selmer_invariant(form: TernaryCubic) -> int:
    return cube_free_part(form.a * form.b * form.c)


def rank_zero_certificate(form: TernaryCubic) -> Certificate | None:
    D = selmer_invariant(form)
    if D not in RANK_ZERO_LIST:
        return None
    # Content removal multiplies abc by a cube, so both invariants must agree.
    assert selmer_invariant(form.normalized()) == D
    return Certificate(
        CertificateKind.RANK_ZERO_LIST,
        {"form": list(form.coefficients), "D": D},
    )


def special_equation_solutions() -> frozenset[tuple[int, int, int]]:
    """Coprime nonzero solutions of x^3 + y^3 + 2z^3 = 0 (trusted rank-zero fact)."""
    return frozenset({(1, 1, -1), (-1, -1, 1)})


def _canonical_sign(v: tuple[int, ...]) -> tuple[int, ...]:
    for c in v:
        if c:
            return v if c > 0 else tuple(-x for x in v)
    return v


def bounded_primitive_search(form: TernaryCubic, height: int) -> list[tuple[int, int, int]]:
    """Primitive solutions with 0 < |x|, |y|, |z| <= height, one per +/- pair."""
    if height < 1:
        raise ValueError("height must be positive")
    a, b, c = form.coefficients
    found = set()
    for x in range(-height, height + 1):
        if x == 0:
            continue
        ax3 = a * x**3
        for y in range(-height, height + 1):
            if y == 0:
                continue
            rest = -(ax3 + b * y**3)
            if rest % c:
                continue
            z = is_perfect_cube(rest // c)
            if z is None or z == 0 or abs(z) > height:
                continue
            if gcd(gcd(x, y), z) != 1:
                continue
            found.add(_canonical_sign((x, y, z)))
    return sorted(found)
