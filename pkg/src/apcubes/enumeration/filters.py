"""Elimination filters applied to complete coefficient vectors."""

from __future__ import annotations

from itertools import combinations

from ..cubic import (
    RANK_ZERO_LIST,
    Certificate,
    CertificateKind,
    TernaryCubic,
    from_triple,
    rank_zero_certificate,
    selmer_invariant,
)
from .vector import CoefficientVector


def filter_rank_zero(v: CoefficientVector) -> Certificate | None:
    """First triple (lexicographic) whose ternary cubic has invariant in the rank-zero list."""
    for triple in combinations(v.indices, 3):
        cert = rank_zero_certificate(from_triple(v, triple))
        if cert is not None:
            return Certificate(cert.kind, {"triple": list(triple), **cert.witness})
    return None


def three_ones_windows(v: CoefficientVector) -> list[int]:
    housed = set(v.indices)
    return [j for j in range(v.k - 2) if {j, j + 1, j + 2} <= housed]


def filter_three_ones(v: CoefficientVector) -> Certificate | None:
    """Three consecutive housed entries equal to one force d = 0."""
    for j in three_ones_windows(v):
        if v[j] == v[j + 1] == v[j + 2] == 1:
            return Certificate(CertificateKind.THREE_ONES, {"j": j})
    return None


def bennett_windows(v: CoefficientVector) -> list[int]:
    housed = set(v.indices)
    return [w for w in range(v.k - 4) if {w, w + 1, w + 3, w + 4} <= housed]


def bennett_form(v: CoefficientVector, w: int) -> TernaryCubic:
    """From (x+1)^2(x+4) - x(x+3)^2 = 4 at x = (n+wd)/d:

    a_{w+1}^2 a_{w+4} X^3 - a_w a_{w+3}^2 Y^3 - 4 d^3 = 0 with
    X = x_{w+1}^2 x_{w+4}, Y = x_w x_{w+3}^2.
    """
    A = v[w + 1] ** 2 * v[w + 4]
    B = v[w] * v[w + 3] ** 2
    return TernaryCubic(A, -B, -4)


def filter_bennett(v: CoefficientVector) -> Certificate | None:
    for w in bennett_windows(v):
        form = bennett_form(v, w)
        D = selmer_invariant(form)
        if D in RANK_ZERO_LIST:
            return Certificate(
                CertificateKind.BENNETT_WINDOW,
                {"w": w, "form": list(form.coefficients), "D": D},
            )
    return None
