"""Independent bounded searches used to spot-check every trusted fact.

Nothing here is a completeness proof: each search is exhaustive only inside
its window.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian
from math import gcd, prod

import numpy as np

from .algebra.field import ALPHA, P3, CubicFieldElement
from .arith import factor_smooth_part, is_perfect_cube, primes_upto
from .enumeration.vector import check_ki, housed_indices
from .resolver import SolutionRecord, verify_solution

SMALL_PRIMES = (2, 3, 5, 7)


@dataclass(frozen=True)
class SearchWindow:
    k: int
    i: int
    n_min: int
    n_max: int
    d_max: int

    def __post_init__(self) -> None:
        check_ki(self.k, self.i)
        if self.n_min > self.n_max or self.d_max < 1:
            raise ValueError(f"empty window {self}")


def cube_test_shortcut(k: int, i: int, n: int, d: int) -> bool:
    """Product-is-a-cube test through per-term factorization (needs gcd(n, d) = 1).

    Primes >= k divide at most one term, so each term's part coprime to the
    primes <= k-1 must itself be a cube; the small primes are then summed mod 3.
    """
    primes = primes_upto(k - 1)
    total = [0] * len(primes)
    for j in housed_indices(k, i):
        t = n + j * d
        if t == 0:
            return False
        f = factor_smooth_part(t, k - 1)
        if is_perfect_cube(f.cofactor) is None:
            return False
        for q, p in enumerate(primes):
            total[q] += f.exponents.get(p, 0)
    return all(e % 3 == 0 for e in total)


def cube_test_direct(k: int, i: int, n: int, d: int) -> bool:
    terms = [n + j * d for j in housed_indices(k, i)]
    return 0 not in terms and is_perfect_cube(prod(terms)) is not None


@lru_cache(maxsize=8)
def _term_table(T: int):
    """Per t in [-T, T]: exponents of 2, 3, 5, 7 mod 3, and whether the rest is a cube.

    ``good[B]`` flags terms whose part coprime to primes <= B is a perfect cube.
    """
    size = 2 * T + 1
    digits = np.zeros((len(SMALL_PRIMES), size), dtype=np.int8)
    good = {B: np.zeros(size, dtype=bool) for B in (3, 5, 7)}
    for t in range(1, T + 1):
        f = factor_smooth_part(t, 7)
        rough = f.cofactor
        for q, p in enumerate(SMALL_PRIMES):
            digits[q, T + t] = digits[q, T - t] = f.exponents.get(p, 0) % 3
        for B in (3, 5, 7):
            rest = rough * prod(p ** f.exponents.get(p, 0) for p in SMALL_PRIMES if p > B)
            good[B][T + t] = good[B][T - t] = is_perfect_cube(rest) is not None
    return digits, good


def _bound_for(k: int) -> int:
    return max(primes_upto(k - 1))


def search_windows(windows: list[SearchWindow]) -> list[SolutionRecord]:
    """All solutions inside the given windows, each re-verified exactly."""
    found: set[tuple[int, int, int, int]] = set()
    groups: dict[tuple[int, int, int, int], list[int]] = {}
    for w in windows:
        groups.setdefault((w.k, w.n_min, w.n_max, w.d_max), []).append(w.i)
    for (k, n_min, n_max, d_max), idxs in groups.items():
        T = max(abs(n_min), abs(n_max)) + (k - 1) * d_max
        digits, good_all = _term_table(T)
        B = _bound_for(k)
        good = good_all[B]
        nq = sum(1 for p in SMALL_PRIMES if p <= B)
        n = np.arange(n_min, n_max + 1, dtype=np.int64)
        for d in range(1, d_max + 1):
            base = (np.gcd(n, d) == 1) & (n != 0)
            if not base.any():
                continue
            idx = [n + j * d + T for j in range(k)]
            bad = [~good[ix] | (ix == T) for ix in idx]
            dig = [digits[:nq, ix].astype(np.int16) for ix in idx]
            bad_total = np.sum(bad, axis=0)
            dig_total = np.sum(dig, axis=0)
            for i in idxs:
                ok = base & (bad_total - bad[i] == 0) & np.all((dig_total - dig[i]) % 3 == 0, axis=0)
                for nv in n[ok].tolist():
                    rec = verify_solution(k, i, nv, d)  # whole-product check; raises if the shortcut erred
                    found.add(rec.key)
    return [verify_solution(*key) for key in sorted(found)]


def search_window(w: SearchWindow) -> list[SolutionRecord]:
    return search_windows([w])


def search_window_direct(w: SearchWindow) -> list[SolutionRecord]:
    """Slow reference: whole-product cube root for every pair in the window."""
    out = []
    for d in range(1, w.d_max + 1):
        for n in range(w.n_min, w.n_max + 1):
            if n != 0 and gcd(n, d) == 1 and cube_test_direct(w.k, w.i, n, d):
                out.append(verify_solution(w.k, w.i, n, d))
    return sorted(out, key=lambda s: s.key)


def _int_cube_roots(v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(root, is_cube) for an int64 array, exact via neighbour checks."""
    r = np.rint(np.cbrt(v.astype(np.float64))).astype(np.int64)
    hit = np.zeros(v.shape, dtype=bool)
    root = np.zeros(v.shape, dtype=np.int64)
    for delta in (-1, 0, 1):
        c = r + delta
        m = c**3 == v
        root[m] = c[m]
        hit |= m
    return root, hit


def search_pair_cubics(height: int) -> list[tuple[int, int, int, int]]:
    """(x, y, z, w), |x|, |y| <= height, gcd(x, y) = 1, xyzw != 0, with

    x^3 + y^3 = 9 z^3 and 5 x^3 - y^3 = 3 w^3.
    """
    if height < 2:
        raise ValueError("height must be >= 2")
    if 5 * height**3 >= 2**62:
        raise ValueError("height too large for int64 screening")
    ys = np.arange(-height, height + 1, dtype=np.int64)
    ys = ys[ys != 0]
    y3 = ys**3
    out = []
    for x in range(1, height + 1):
        x3 = x**3
        s1 = x3 + y3
        s2 = 5 * x3 - y3
        cand = (s1 % 9 == 0) & (s1 != 0) & (s2 % 3 == 0) & (s2 != 0) & (np.gcd(ys, x) == 1)
        if not cand.any():
            continue
        z, zc = _int_cube_roots(np.where(cand, s1 // 9, 0))
        w, wc = _int_cube_roots(np.where(cand, s2 // 3, 0))
        for q in np.flatnonzero(cand & zc & wc):
            sol = (x, int(ys[q]), int(z[q]), int(w[q]))
            X, Y, Z, W = sol
            assert X**3 + Y**3 == 9 * Z**3 and 5 * X**3 - Y**3 == 3 * W**3
            out.append(sol)
            out.append(tuple(-c for c in sol))
    return sorted(out)


def cubic_field_quotient(x: int, y: int) -> CubicFieldElement:
    """(alpha x - y)(x^2 - x y + y^2) / (3 (2 - alpha))."""
    return (ALPHA * x - y) * (x * x - x * y + y * y) / (3 * P3)


def search_cubic_field_relation(height: int) -> list[tuple[int, int, tuple[int, int, int]]]:
    """Coprime (x, y), |x|, |y| <= height, xy != 0, whose quotient is u^3 for an integral u.

    ``u`` is looked up among integral elements with coordinates bounded by
    height**(2/3) + 1; that bound is heuristic, so an empty answer outside it
    proves nothing.
    """
    if height < 2:
        raise ValueError("height must be >= 2")
    ub = int(height ** (2 / 3)) + 1
    # quotient coordinates are integers over 81 = |norm(3 (2 - alpha))|
    A = [int(c * 81) for c in (ALPHA / (3 * P3)).coords]
    Bc = [int(c * 81) for c in (CubicFieldElement(1) / (3 * P3)).coords]
    xs = np.arange(-height, height + 1, dtype=np.int64)
    X, Y = np.meshgrid(xs, xs, indexing="ij")
    S = X * X - X * Y + Y * Y
    mask = (X != 0) & (Y != 0) & (np.gcd(X, Y) == 1)
    coords81 = [S * (X * A[q] - Y * Bc[q]) for q in range(3)]
    for c in coords81:
        mask &= c % 81 == 0
    if not mask.any():
        return []
    cubes: dict[tuple[int, int, int], tuple[int, int, int]] = {}
    rng = range(-ub, ub + 1)
    for u in cartesian(rng, rng, rng):
        a0, a1, a2 = u
        # (a0 + a1 al + a2 al^2)^2 then times u, with al^3 = 5
        s0 = a0 * a0 + 10 * a1 * a2
        s1 = 2 * a0 * a1 + 5 * a2 * a2
        s2 = 2 * a0 * a2 + a1 * a1
        c = (a0 * s0 + 5 * (a1 * s2 + a2 * s1), a0 * s1 + a1 * s0 + 5 * a2 * s2, a0 * s2 + a1 * s1 + a2 * s0)
        cubes[c] = u
    out = []
    for p, q in zip(*np.nonzero(mask)):
        key = tuple(int(coords81[r][p, q]) // 81 for r in range(3))
        u = cubes.get(key)
        if u is not None:
            x, y = int(X[p, q]), int(Y[p, q])
            assert cubic_field_quotient(x, y) == CubicFieldElement(*u) ** 3
            out.append((x, y, u))
    return sorted(out)
