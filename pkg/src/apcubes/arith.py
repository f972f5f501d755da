"""Exact integer utilities: smooth factorization, cube-free parts, cube roots."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import prod


@lru_cache(maxsize=None)
def primes_upto(bound: int) -> tuple[int, ...]:
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, int(bound**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, bound + 1, p)))
    return tuple(p for p, flag in enumerate(sieve) if flag)


@dataclass(frozen=True)
class SmoothFactorization:
    """``sign * cofactor * prod(p**e)`` with every ``p <= bound``.

    ``cofactor`` is positive and has no prime factor ``<= bound``.
    """

    bound: int
    exponents: dict[int, int] = field(default_factory=dict)
    cofactor: int = 1
    sign: int = 1

    def value(self) -> int:
        return self.sign * self.cofactor * prod(p**e for p, e in self.exponents.items())

    @property
    def is_smooth(self) -> bool:
        return self.cofactor == 1


def factor_smooth_part(n: int, bound: int) -> SmoothFactorization:
    if n == 0:
        raise ValueError("cannot factor zero")
    if bound < 2:
        raise ValueError("smoothness bound must be >= 2")
    sign = -1 if n < 0 else 1
    m = abs(n)
    exponents: dict[int, int] = {}
    for p in primes_upto(bound):
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            exponents[p] = e
    return SmoothFactorization(bound, exponents, m, sign)


def icbrt(n: int) -> int:
    """Floor of the real cube root of ``n`` (exact, any size, any sign)."""
    if n < 0:
        r = -icbrt(-n)
        return r if r**3 == n else r - 1
    if n < 2:
        return n
    # Newton from above; the initial guess is a power of two >= cbrt(n).
    x = 1 << -(-n.bit_length() // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    while x**3 > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x


def is_perfect_cube(n: int) -> int | None:
    """Return ``r`` with ``r**3 == n``, or ``None``."""
    r = icbrt(n)
    return r if r**3 == n else None


@lru_cache(maxsize=1 << 16)
def _cube_free_abs(m: int) -> int:
    c = 1
    p = 2
    # Once p**3 exceeds what is left, the remainder is P, P**2 or PQ with
    # primes above p, hence already cube-free.
    while p * p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        c *= p ** (e % 3)
        p += 1 if p == 2 else 2
    return c * m


def cube_free_part(n: int) -> int:
    """The positive cube-free ``c`` with ``n == c * f**3``."""
    if n == 0:
        raise ValueError("zero has no cube-free part")
    return _cube_free_abs(abs(n))


def exponent_class(f: SmoothFactorization) -> tuple[int, ...]:
    """Exponents mod 3, one per prime ``<= f.bound``."""
    if not f.is_smooth:
        raise ValueError(f"not {f.bound}-smooth: cofactor {f.cofactor}")
    return tuple(f.exponents.get(p, 0) % 3 for p in primes_upto(f.bound))


def is_cube_free(n: int) -> bool:
    return n != 0 and cube_free_part(n) == abs(n)
