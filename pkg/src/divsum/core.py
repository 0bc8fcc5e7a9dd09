"""Integer fundamentals: gcd, sieve tables, factorization, Mobius and totient.

All functions take plain Python ints >= 1.  Exact rational arithmetic
throughout the package uses gmpy2.mpq, which normalizes to lowest terms
with a positive denominator on every construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from gmpy2 import mpq

__all__ = [
    "BigRational",
    "SieveTables",
    "build_sieve",
    "divisors",
    "divisors_from_factors",
    "factorize",
    "gcd",
    "mobius",
    "totient",
]

# Exact fraction type used across the package (always lowest terms, q >= 1).
BigRational = mpq

# factorize() without tables trial-divides; keep it to desk-scale inputs.
_TRIAL_DIVISION_MAX = 10**12


def _check_positive(n: int, name: str = "n") -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n!r}")


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two positive integers."""
    _check_positive(a, "a")
    _check_positive(b, "b")
    return math.gcd(a, b)


@dataclass(frozen=True)
class SieveTables:
    """Immutable precomputed tables for 1..limit.

    spf[n] is the smallest prime factor of n (n >= 2), mu[n] the Mobius
    function and phi[n] Euler's totient.  Index 0 is unused.
    """

    limit: int
    spf: np.ndarray
    mu: np.ndarray
    phi: np.ndarray


def build_sieve(limit: int) -> SieveTables:
    """Build smallest-prime-factor, Mobius and totient tables up to limit."""
    _check_positive(limit, "limit")
    spf = np.arange(limit + 1, dtype=np.int64)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == p:
            seg = spf[p * p :: p]
            seg[seg == np.arange(p * p, limit + 1, p, dtype=np.int64)] = p

    phi = np.arange(limit + 1, dtype=np.int64)
    mu = np.ones(limit + 1, dtype=np.int64)
    if limit >= 2:
        primes = np.nonzero(spf[2:] == np.arange(2, limit + 1))[0] + 2
        for p in primes:
            phi[p::p] -= phi[p::p] // p
            mu[p::p] = -mu[p::p]
            mu[p * p :: p * p] = 0
    mu[0] = 0
    phi[0] = 0
    for arr in (spf, mu, phi):
        arr.flags.writeable = False
    return SieveTables(limit=limit, spf=spf, mu=mu, phi=phi)


def factorize(n: int, tables: SieveTables | None = None) -> list[tuple[int, int]]:
    """Prime factorization as an ascending list of (prime, exponent) pairs."""
    _check_positive(n)
    if tables is not None:
        if n > tables.limit:
            raise ValueError(f"n={n} exceeds sieve limit {tables.limit}")
        spf = tables.spf
        factors: list[tuple[int, int]] = []
        while n > 1:
            p = int(spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        return factors

    if n > _TRIAL_DIVISION_MAX:
        raise ValueError(f"n={n} too large for trial division (max {_TRIAL_DIVISION_MAX})")
    factors = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
    # candidates 6k +- 1
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                factors.append((p, e))
        d += 6
    if n > 1:
        factors.append((n, 1))
    return factors


def mobius(n: int, tables: SieveTables | None = None) -> int:
    """Mobius function: 0 if n has a squared factor, else (-1)^(#primes)."""
    if tables is not None and 1 <= n <= tables.limit:
        return int(tables.mu[n])
    factors = factorize(n, tables)
    if any(e >= 2 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def totient(n: int, tables: SieveTables | None = None) -> int:
    """Euler's totient: count of 1 <= k <= n coprime to n."""
    if tables is not None and 1 <= n <= tables.limit:
        return int(tables.phi[n])
    result = n
    for p, _ in factorize(n, tables):
        result -= result // p
    return result


def divisors_from_factors(factors: list[tuple[int, int]]) -> list[int]:
    """All divisors (ascending) of the integer with the given factorization."""
    divs = [1]
    for p, e in factors:
        pk = 1
        extended = list(divs)
        for _ in range(e):
            pk *= p
            extended.extend(d * pk for d in divs)
        divs = extended
    return sorted(divs)


def divisors(n: int, tables: SieveTables | None = None) -> list[int]:
    """All divisors of n in ascending order."""
    return divisors_from_factors(factorize(n, tables))
