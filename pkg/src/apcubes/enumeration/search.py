"""Incremental enumeration of coefficient vectors.

Entries are placed left to right over the housed indices; each new entry must
satisfy gcd(a_j, a_l) | (l - j) against every placed entry, and the last entry
is forced by requiring the product to be a cube.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd, prod
from typing import Iterator

import numpy as np

from ..arith import cube_free_part, is_perfect_cube
from .kernel import get_kernel
from .tables import Tables, admissible_entries, build_tables
from .vector import CoefficientVector, check_ki, housed_indices

NODE_CONVENTION = "accepted-prefix-length>=1-excluding-forced-last-entry"


@dataclass(frozen=True)
class PartialVector:
    """The leading entries of a coefficient vector, in housed-index order."""

    k: int
    i: int
    entries: tuple[int, ...] = ()

    @property
    def placed_indices(self) -> tuple[int, ...]:
        return housed_indices(self.k, self.i)[: len(self.entries)]

    @property
    def next_index(self) -> int | None:
        idx = housed_indices(self.k, self.i)
        return idx[len(self.entries)] if len(self.entries) < len(idx) else None

    @property
    def missing(self) -> int:
        return self.k - 1 - len(self.entries)


def extend(prefix: PartialVector, a: int) -> PartialVector | None:
    j = prefix.next_index
    if j is None:
        raise ValueError("prefix is already complete")
    if a not in admissible_entries(prefix.k):
        raise ValueError(f"{a} is not an admissible entry for k={prefix.k}")
    for l, b in zip(prefix.placed_indices, prefix.entries):
        if (j - l) % gcd(a, b):
            return None
    return PartialVector(prefix.k, prefix.i, prefix.entries + (a,))


def close_final_entry(prefix: PartialVector) -> CoefficientVector | None:
    """Complete a prefix missing one entry with the unique cube-closing value."""
    if prefix.missing != 1:
        raise ValueError(f"prefix must miss exactly one entry, misses {prefix.missing}")
    p = prod(prefix.entries)
    # a * p must be a cube and a is cube-free: a = cube-free part of p**2.
    a = cube_free_part(p * p)
    assert is_perfect_cube(a * p) is not None
    done = extend(prefix, a)
    return None if done is None else CoefficientVector(prefix.k, prefix.i, done.entries)


@dataclass(frozen=True)
class EnumerationStats:
    incomplete_nodes: int
    complete_vectors: int
    survivors: int | None = None
    depth_counts: tuple[int, ...] = ()
    convention: str = NODE_CONVENTION

    def __post_init__(self) -> None:
        assert self.complete_vectors <= self.incomplete_nodes or self.incomplete_nodes == 0
        assert self.survivors is None or self.survivors <= self.complete_vectors


@dataclass
class Enumeration:
    """All structurally valid vectors for one (k, i), as entry-index rows."""

    k: int
    i: int
    rows: np.ndarray
    depth_counts: np.ndarray
    kernel: str
    tables: Tables = field(repr=False)

    def __len__(self) -> int:
        return len(self.rows)

    def vector(self, r: int) -> CoefficientVector:
        return CoefficientVector(self.k, self.i, tuple(self.tables.values[self.rows[r]].tolist()))

    def __iter__(self) -> Iterator[CoefficientVector]:
        values = self.tables.values
        for row in self.rows:
            yield CoefficientVector(self.k, self.i, tuple(values[row].tolist()))

    def stats(self, survivors: int | None = None) -> EnumerationStats:
        return EnumerationStats(
            incomplete_nodes=int(self.depth_counts.sum()),
            complete_vectors=len(self.rows),
            survivors=survivors,
            depth_counts=tuple(int(c) for c in self.depth_counts),
        )

    def rank_zero_triples(self) -> np.ndarray:
        """Per row, the index into ``tables.triples`` of the first eliminating triple, or -1."""
        return get_kernel(self.kernel).rank_zero_scan(self.tables, self.rows)

    def triple(self, q: int) -> tuple[int, int, int]:
        return tuple(int(self.tables.positions[p]) for p in self.tables.triples[q])


def _block(args):
    k, i, kernel, first = args
    return get_kernel(kernel).enumerate_block(build_tables(k, i), first)


def enumerate_vectors(k: int, i: int, *, threads: int = 1, kernel: str | None = None) -> Enumeration:
    """Every vector meeting the three structural constraints, lexicographically ordered.

    The search tree is split by first entry; results are concatenated in
    first-entry order, so the output does not depend on ``threads``.
    """
    check_ki(k, i)
    kernel = kernel or get_kernel().IMPLEMENTATION
    tables = build_tables(k, i)
    firsts = list(range(tables.n_values))
    if threads <= 1:
        rows, depth = get_kernel(kernel).enumerate_block(tables, firsts)
    else:
        jobs = [(k, i, kernel, [a]) for a in firsts]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_block, jobs))
        rows = np.concatenate([p[0] for p in parts]) if parts else np.zeros((0, k - 1), np.int64)
        depth = np.sum([p[1] for p in parts], axis=0)
    return Enumeration(k, i, rows.reshape(-1, k - 1), np.asarray(depth, dtype=np.int64), kernel, tables)
