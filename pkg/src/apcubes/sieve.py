"""Modular feasibility of n + j d = a_j x_j^3 with gcd(n, d) = 1.

For a modulus m, a residue pair (n, d) survives when gcd(n, d, m) = 1 and
every housed term n + j d is congruent to a_j times a cube. If no pair
survives, no integer solution can have this coefficient vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .cubic import Certificate, CertificateKind
from .enumeration.vector import CoefficientVector

DEFAULT_MODULI: tuple[int, ...] = (8, 16, 9, 27, 5, 7, 63, 72)


@dataclass(frozen=True)
class SieveReport:
    modulus: int
    feasible: bool
    surviving_residue_pairs: int

    def __post_init__(self) -> None:
        assert self.feasible == (self.surviving_residue_pairs > 0)


def cube_multiples(a: int, m: int) -> np.ndarray:
    """Boolean mask over Z/m of the residues a * x^3."""
    mask = np.zeros(m, dtype=bool)
    x = np.arange(m, dtype=np.int64)
    mask[(a % m) * (x**3 % m) % m] = True
    return mask


def surviving_pairs(v: CoefficientVector, m: int) -> np.ndarray:
    """Boolean (m, m) array indexed by (n mod m, d mod m)."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    n = np.arange(m, dtype=np.int64)[:, None]
    d = np.arange(m, dtype=np.int64)[None, :]
    coprime = np.gcd(np.gcd(n, d), m) == 1
    alive = np.broadcast_to(coprime, (m, m)).copy()
    for j, a in v.items():
        alive &= cube_multiples(a, m)[(n + j * d) % m]
    return alive


def sieve(v: CoefficientVector, m: int) -> SieveReport:
    count = int(surviving_pairs(v, m).sum())
    return SieveReport(m, count > 0, count)


def filter_sieve(v: CoefficientVector, moduli=DEFAULT_MODULI) -> Certificate | None:
    for m in moduli:
        report = sieve(v, m)
        if not report.feasible:
            return Certificate(CertificateKind.MODULAR_SIEVE, {"modulus": m})
    return None


def sieve_brute(v: CoefficientVector, m: int) -> int:
    """Loop-based count of surviving pairs; independent check of ``sieve``."""
    reps = {j: {a * x**3 % m for x in range(m)} for j, a in v.items()}
    return sum(
        1
        for n in range(m)
        for d in range(m)
        if gcd(gcd(n, d), m) == 1 and all((n + j * d) % m in reps[j] for j in reps)
    )
