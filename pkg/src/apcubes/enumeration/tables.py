"""Lookup tables shared by the compiled and pure-Python search kernels.

Every admissible entry is a product of p**e, p <= k-1, e in {0, 1, 2}, and is
identified by its exponent vector read as a base-3 number (its *code*).
Multiplying entries adds codes digit-wise mod 3, which is all the cube test and
the Selmer invariant need. Entry indices follow increasing numeric value so a
depth-first search by index emits vectors in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import gcd

import numpy as np

from ..arith import factor_smooth_part, primes_upto
from ..cubic import RANK_ZERO_LIST
from .vector import check_ki, housed_indices


def _code(n: int, primes: tuple[int, ...]) -> int:
    f = factor_smooth_part(n, primes[-1])
    assert f.is_smooth, n
    return sum((f.exponents.get(p, 0) % 3) * 3**q for q, p in enumerate(primes))


@lru_cache(maxsize=None)
def admissible_entries(k: int) -> tuple[int, ...]:
    """All cube-free (k-1)-smooth positive integers, ascending."""
    check_ki(k)
    primes = primes_upto(k - 1)
    values = []
    for exps in product(range(3), repeat=len(primes)):
        v = 1
        for p, e in zip(primes, exps):
            v *= p**e
        values.append(v)
    return tuple(sorted(values))


@dataclass(frozen=True)
class Tables:
    k: int
    i: int
    primes: tuple[int, ...]
    values: np.ndarray  # int64[N], ascending
    codes: np.ndarray  # int64[N]
    code_to_idx: np.ndarray  # int64[C]
    add: np.ndarray  # int64[C, C]: code of the product's cube class
    neg: np.ndarray  # int64[C]: code of the inverse class
    compat: np.ndarray  # uint8[k, N, N]: gcd(v_a, v_b) | dist
    positions: np.ndarray  # int64[k-1]: housed indices
    triples: np.ndarray  # int64[T, 3]: position triples, lexicographic
    triple_codes: np.ndarray  # int64[T]: class of |s-t||t-r||r-s|
    in_list: np.ndarray  # uint8[C]: cube-free value of the class lies in the rank-zero list

    @property
    def n_values(self) -> int:
        return len(self.values)

    @property
    def n_codes(self) -> int:
        return 3 ** len(self.primes)

    def code_value(self, code: int) -> int:
        return int(self.values[self.code_to_idx[code]])


@lru_cache(maxsize=None)
def build_tables(k: int, i: int) -> Tables:
    check_ki(k, i)
    primes = primes_upto(k - 1)
    values = admissible_entries(k)
    n = len(values)
    C = 3 ** len(primes)
    codes = [_code(v, primes) for v in values]
    code_to_idx = [0] * C
    for idx, c in enumerate(codes):
        code_to_idx[c] = idx

    def digits(c):
        return [(c // 3**q) % 3 for q in range(len(primes))]

    def undigits(ds):
        return sum((d % 3) * 3**q for q, d in enumerate(ds))

    add = np.array(
        [[undigits([x + y for x, y in zip(digits(a), digits(b))]) for b in range(C)] for a in range(C)],
        dtype=np.int64,
    )
    neg = np.array([undigits([-x for x in digits(a)]) for a in range(C)], dtype=np.int64)
    compat = np.zeros((k, n, n), dtype=np.uint8)
    for dist in range(1, k):
        for a in range(n):
            for b in range(n):
                compat[dist, a, b] = dist % gcd(values[a], values[b]) == 0
    positions = housed_indices(k, i)
    triples = np.array(list(combinations(range(k - 1), 3)), dtype=np.int64).reshape(-1, 3)
    triple_codes = np.array(
        [
            _code(
                abs(positions[s] - positions[t]) * abs(positions[t] - positions[r]) * abs(positions[r] - positions[s]),
                primes,
            )
            for r, s, t in triples
        ],
        dtype=np.int64,
    )
    value_of_code = [values[code_to_idx[c]] for c in range(C)]
    in_list = np.array([value_of_code[c] in RANK_ZERO_LIST for c in range(C)], dtype=np.uint8)
    return Tables(
        k=k,
        i=i,
        primes=primes,
        values=np.array(values, dtype=np.int64),
        codes=np.array(codes, dtype=np.int64),
        code_to_idx=np.array(code_to_idx, dtype=np.int64),
        add=add,
        neg=neg,
        compat=compat,
        positions=np.array(positions, dtype=np.int64),
        triples=triples,
        triple_codes=triple_codes,
        in_list=in_list,
    )
