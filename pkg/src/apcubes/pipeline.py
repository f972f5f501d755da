"""End-to-end case analysis: enumerate, filter, resolve, assemble."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .cubic import Certificate, CertificateKind, from_triple, selmer_invariant
from .enumeration.filters import filter_bennett, filter_three_ones
from .enumeration.search import Enumeration, EnumerationStats, enumerate_vectors
from .enumeration.vector import CoefficientVector, K_MAX, K_MIN, check_ki
from .resolver import (
    KNOWN_SOLUTIONS,
    PatternMismatch,
    Resolution,
    SolutionRecord,
    resolve_edge,
    resolve_k7_i3,
    resolve_two_adic_descent,
)
from .sieve import DEFAULT_MODULI, filter_sieve

log = logging.getLogger(__name__)

FILTERS = ("rank-zero", "three-ones", "bennett", "sieve")

# Survivors of the rank-zero scan alone, for the cases worked by hand.
REFERENCE_SURVIVORS: dict[tuple[int, int], set[tuple[int, ...]]] = {
    (5, 1): {(1, 1, 1, 1), (6, 1, 9, 4), (1, 2, 1, 4)},
    (5, 2): {(1, 1, 1, 1), (1, 36, 2, 3), (3, 2, 36, 1)},
    (5, 3): {(1, 1, 1, 1), (4, 9, 1, 6), (4, 1, 2, 1)},
    (6, 1): {(1, 1, 1, 1, 1), (50, 36, 1, 1, 15)},
    (6, 2): {(1,) * 5},
    (7, 1): {(1,) * 6},
    (7, 2): {(1,) * 6},
    (7, 3): {(1,) * 6, (4, 25, 18, 4, 3, 10), (10, 3, 4, 18, 25, 4)},
}
for _k in range(8, K_MAX + 1):
    for _i in range(1, (_k - 1) // 2 + 1):
        REFERENCE_SURVIVORS[(_k, _i)] = {(1,) * (_k - 1)}


def parse_filters(spec: str | Sequence[str]) -> tuple[str, ...]:
    names = [s.strip() for s in spec.split(",")] if isinstance(spec, str) else list(spec)
    names = [n for n in names if n]
    bad = [n for n in names if n not in FILTERS]
    if bad:
        raise ValueError(f"unknown filter(s) {bad}; choose from {FILTERS}")
    return tuple(n for n in FILTERS if n in names)


def rank_zero_certificate_for(v: CoefficientVector, triple: tuple[int, int, int]) -> Certificate:
    form = from_triple(v, triple)
    return Certificate(
        CertificateKind.RANK_ZERO_LIST,
        {"triple": list(triple), "form": list(form.coefficients), "D": selmer_invariant(form)},
    )


@dataclass
class FilterRun:
    """Outcome of enumeration plus the requested filters for one (k, i)."""

    k: int
    i: int
    filters: tuple[str, ...]
    enumeration: Enumeration
    rank_zero: np.ndarray | None  # triple index per row, -1 = not eliminated
    later: list[tuple[CoefficientVector, Certificate]]
    survivors: list[CoefficientVector]

    @property
    def stats(self) -> EnumerationStats:
        # "survivors" counts what is left after the rank-zero scan alone.
        after_rz = len(self.enumeration) if self.rank_zero is None else int((self.rank_zero < 0).sum())
        return self.enumeration.stats(survivors=after_rz)

    def rank_zero_survivors(self) -> list[CoefficientVector]:
        rows = range(len(self.enumeration)) if self.rank_zero is None else np.flatnonzero(self.rank_zero < 0)
        return [self.enumeration.vector(int(r)) for r in rows]

    def eliminations(self) -> Iterator[tuple[CoefficientVector, Certificate]]:
        """Every eliminated vector with its certificate, in emission order."""
        later = {v.entries: c for v, c in self.later}
        enum = self.enumeration
        for r in range(len(enum)):
            v = enum.vector(r)
            if self.rank_zero is not None and self.rank_zero[r] >= 0:
                yield v, rank_zero_certificate_for(v, enum.triple(int(self.rank_zero[r])))
            elif v.entries in later:
                yield v, later[v.entries]


def run_filters(
    k: int,
    i: int,
    filters: Sequence[str] = FILTERS,
    *,
    threads: int = 1,
    kernel: str | None = None,
    moduli: Sequence[int] = DEFAULT_MODULI,
) -> FilterRun:
    check_ki(k, i)
    filters = parse_filters(filters)
    enum = enumerate_vectors(k, i, threads=threads, kernel=kernel)
    rz = enum.rank_zero_triples() if "rank-zero" in filters else None
    remaining = FilterRun(k, i, filters, enum, rz, [], []).rank_zero_survivors()
    later: list[tuple[CoefficientVector, Certificate]] = []
    survivors = []
    for v in remaining:
        cert = None
        if "three-ones" in filters:
            cert = filter_three_ones(v)
        if cert is None and "bennett" in filters:
            cert = filter_bennett(v)
        if cert is None and "sieve" in filters:
            cert = filter_sieve(v, moduli)
        if cert is None:
            survivors.append(v)
        else:
            later.append((v, cert))
    log.info("k=%d i=%d: %d complete, %d after filters %s", k, i, len(enum), len(survivors), filters)
    return FilterRun(k, i, filters, enum, rz, later, survivors)


def resolve_survivor(v: CoefficientVector) -> Resolution:
    if (v.k, v.i) in ((5, 1), (5, 3)):
        return resolve_two_adic_descent(v, (0, 2, 4))
    if (v.k, v.i) == (7, 3):
        return resolve_k7_i3(v)
    raise PatternMismatch(f"no resolver for surviving vector {v} at (k, i) = ({v.k}, {v.i})")


@dataclass
class CaseResult:
    k: int
    i: int
    filter_run: FilterRun | None
    resolutions: list[tuple[CoefficientVector | None, Resolution]] = field(default_factory=list)
    unresolved: list[CoefficientVector] = field(default_factory=list)

    @property
    def solutions(self) -> list[SolutionRecord]:
        return sorted((s for _, r in self.resolutions for s in r.solutions), key=lambda s: s.key)


def resolve_case(k: int, i: int, *, threads: int = 1, kernel: str | None = None) -> CaseResult:
    check_ki(k, i)
    if i in (0, k - 1):
        return CaseResult(k, i, None, [(None, resolve_edge(k, i))])
    run = run_filters(k, i, FILTERS, threads=threads, kernel=kernel)
    result = CaseResult(k, i, run)
    for v in run.survivors:
        try:
            result.resolutions.append((v, resolve_survivor(v)))
        except PatternMismatch:
            result.unresolved.append(v)
    return result


@dataclass
class TheoremRun:
    cases: list[CaseResult]

    @property
    def solutions(self) -> list[SolutionRecord]:
        return sorted((s for c in self.cases for s in c.solutions), key=lambda s: s.key)

    @property
    def unresolved(self) -> list[CoefficientVector]:
        return [v for c in self.cases for v in c.unresolved]

    def matches_theorem(self) -> bool:
        return not self.unresolved and [s.key for s in self.solutions] == sorted(KNOWN_SOLUTIONS)


def prove_theorem(
    ks: Sequence[int] = range(K_MIN, K_MAX + 1), *, threads: int = 1, kernel: str | None = None
) -> TheoremRun:
    cases = [resolve_case(k, i, threads=threads, kernel=kernel) for k in ks for i in range(k)]
    return TheoremRun(cases)
