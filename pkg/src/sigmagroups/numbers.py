"""Tiny integer helpers; all arguments are small positive ints."""
from __future__ import annotations

import functools


@functools.lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[tuple[int, int], ...]:
    """Sorted (prime, exponent) pairs of n >= 1."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def primes_of(n: int) -> frozenset[int]:
    return frozenset(p for p, _ in prime_factors(n))


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == ((n, 1),)


def is_prime_power(n: int) -> bool:
    return n >= 2 and len(prime_factors(n)) == 1


def part_for_primes(n: int, primes) -> int:
    """Largest divisor of n supported on the given primes."""
    out = 1
    for p, e in prime_factors(n):
        if p in primes:
            out *= p ** e
    return out
