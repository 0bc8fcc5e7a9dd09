"""Specializations of the divisor-sum identity, each with an independent
cross-check: generalized divisor sums, the divisor-product log identity,
the Kronecker-delta identity, a truncated series for sigma, and the
Robin / Lagarias inequality checkers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from gmpy2 import mpq

from .core import SieveTables, build_sieve, divisors, factorize
from .identity import GSpec, LogCoeffVector, eval_identity, holder_coefficient

__all__ = [
    "EULER_GAMMA",
    "InequalityReport",
    "divisor_count",
    "harmonic",
    "kronecker_delta",
    "lagarias_check",
    "log_product_divisors",
    "robin_check",
    "sigma",
    "sigma_gamma",
    "sigma_range",
    "sigma_series_partial",
    "zero_identity_residual",
]

# Euler-Mascheroni constant, double precision; this is a checker, not a
# proof tool.
EULER_GAMMA = 0.57721566490153286

_harmonic_cache: list[mpq] = [mpq(0)]


def harmonic(n: int) -> mpq:
    """H_n = 1 + 1/2 + ... + 1/n as an exact rational (H_0 = 0)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_harmonic_cache) <= n:
        i = len(_harmonic_cache)
        _harmonic_cache.append(_harmonic_cache[-1] + mpq(1, i))
    return _harmonic_cache[n]


def _sigma_exact(n: int, gamma: int, tables: SieveTables | None = None) -> int:
    """sum of d^gamma over divisors d of n, by factorization."""
    total = 1
    for p, e in factorize(n, tables):
        pg = p**gamma
        total *= (pg ** (e + 1) - 1) // (pg - 1) if gamma > 0 else (e + 1)
    return total


def sigma_gamma(n: int, gamma, method: str = "identity", tables: SieveTables | None = None):
    """sigma_gamma(n) = sum of d^gamma over divisors of n.

    Exact integer for integer gamma >= 0; float otherwise.  The identity
    method evaluates sum_k c_k(n) k^(gamma-1) sum_l l^(gamma-1).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    exact = float(gamma) == int(gamma) and gamma >= 0
    if method == "oracle":
        if exact:
            return _sigma_exact(n, int(gamma), tables)
        return math.fsum(d**gamma for d in divisors(n, tables))
    if method != "identity":
        raise ValueError(f"unknown method {method!r}")
    if tables is None or tables.limit < n:
        tables = build_sieve(n)
    if exact:
        gamma = int(gamma)
        total = mpq(0)
        for k in range(1, n + 1):
            coeff = holder_coefficient(n, k, tables)
            if coeff:
                m = n // k
                inner = sum(mpq(l) ** (gamma - 1) for l in range(1, m + 1))
                total += coeff * mpq(k) ** (gamma - 1) * inner
        if total.denominator != 1 or total < 0:
            raise ArithmeticError(f"identity for sigma_{gamma}({n}) not a natural: {total}")
        return int(total)
    terms = []
    for k in range(1, n + 1):
        coeff = holder_coefficient(n, k, tables)
        if coeff:
            inner = math.fsum(l ** (gamma - 1) for l in range(1, n // k + 1))
            terms.append(coeff * k ** (gamma - 1) * inner)
    return math.fsum(terms)


def divisor_count(n: int, method: str = "identity", tables: SieveTables | None = None) -> int:
    """d(n) via sum_k c_k(n)/k * H_(n//k); asserted to land on an integer."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if method == "oracle":
        count = 1
        for _, e in factorize(n, tables):
            count *= e + 1
        return count
    if method != "identity":
        raise ValueError(f"unknown method {method!r}")
    if tables is None or tables.limit < n:
        tables = build_sieve(n)
    total = mpq(0)
    for k in range(1, n + 1):
        coeff = holder_coefficient(n, k, tables)
        if coeff:
            total += mpq(coeff, k) * harmonic(n // k)
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(f"identity for d({n}) not a natural: {total}")
    return int(total)


def sigma(n: int, method: str = "identity", tables: SieveTables | None = None) -> int:
    """sigma(n) via sum_k floor(n/k) * c_k(n); pure integer arithmetic."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if method == "oracle":
        return _sigma_exact(n, 1, tables)
    if method != "identity":
        raise ValueError(f"unknown method {method!r}")
    if tables is None or tables.limit < n:
        tables = build_sieve(n)
    return sum(
        (n // k) * c for k in range(1, n + 1) if (c := holder_coefficient(n, k, tables))
    )


def sigma_range(n_max: int) -> np.ndarray:
    """sigma(n) for every n <= n_max, by a divisor-accumulation sieve.

    Index 0 is unused.  int64 is ample for desk-scale sweeps.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    sig = np.zeros(n_max + 1, dtype=np.int64)
    for d in range(1, n_max + 1):
        sig[d::d] += d
    return sig


def log_product_divisors(
    n: int, method: str = "eq14", tables: SieveTables | None = None
) -> tuple[float, LogCoeffVector]:
    """log of the product of divisors of n, as (float, exact log vector).

    eq14 is the closed form d(n)/2 * log(n); eq13 is the identity sum
    with g = log.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if method == "eq14":
        d = divisor_count(n, "oracle", tables)
        vec = LogCoeffVector.log_of(n, tables) * mpq(d, 2)
        return 0.5 * d * math.log(n), vec
    if method != "eq13":
        raise ValueError(f"unknown method {method!r}")
    if tables is None or tables.limit < n:
        tables = build_sieve(n)
    vec = eval_identity(n, GSpec.log("logcoeff"), "eq9", tables)
    val = eval_identity(n, GSpec.log("float"), "eq9", tables)
    return val, vec


def zero_identity_residual(
    n: int, tables: SieveTables | None = None
) -> tuple[float, LogCoeffVector]:
    """sum_k c_k(n) sum_l log((kl)^2 / n)/(kl), which vanishes identically.

    Returned as (float, exact log vector); the vector must be zero and the
    float is rounding noise only.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if tables is None or tables.limit < n:
        tables = build_sieve(n)
    log_n_vec = LogCoeffVector.log_of(n, tables)
    log_n = math.log(n)
    vec = LogCoeffVector()
    terms = []
    for k in range(1, n + 1):
        coeff = holder_coefficient(n, k, tables)
        if not coeff:
            continue
        for l in range(1, n // k + 1):
            kl = k * l
            w = mpq(coeff, kl)
            vec.add_scaled(LogCoeffVector.log_of(kl, tables), 2 * w)
            vec.add_scaled(log_n_vec, -w)
            terms.append(coeff * (2 * math.log(kl) - log_n) / kl)
    return math.fsum(terms), vec


def kronecker_delta(n: int, tables: SieveTables | None = None) -> int:
    """1 if n == 1 else 0, computed through the identity with g = mobius."""
    if n < 1:
        raise ValueError("n must be >= 1")
    value = eval_identity(n, GSpec.mobius(), "eq9", tables)
    expected = 1 if n == 1 else 0
    if value != expected:
        raise ArithmeticError(f"Kronecker identity broke at n={n}: got {value}")
    return expected


def sigma_series_partial(n: int, terms: int, tables: SieveTables | None = None) -> float:
    """Truncation of sigma(n) = (pi^2/6) * sum_{k>=1} (n/k^2) c_k(n).

    `terms` is the truncation index K; c_k(n) is exact, cast to float.
    """
    if n < 1 or terms < 1:
        raise ValueError("n and terms must be >= 1")
    if tables is None or tables.limit < terms:
        tables = build_sieve(terms)
    k = np.arange(1, terms + 1, dtype=np.int64)
    r = k // np.gcd(k, n)
    # phi(r) | phi(k) because r | k, so the integer division is exact.
    coeff = tables.mu[r] * (tables.phi[k] // tables.phi[r])
    partial = float(np.sum(n / (k.astype(np.float64) ** 2) * coeff))
    return (math.pi**2 / 6) * partial


@dataclass(frozen=True)
class InequalityReport:
    n: int
    sigma: int
    bound: float
    holds: bool


def robin_check(n: int, tables: SieveTables | None = None) -> InequalityReport:
    """Check sigma(n) < n * e^gamma * log(log(n)); needs n >= 3."""
    if n < 3:
        raise ValueError("robin_check requires n >= 3")
    s = _sigma_exact(n, 1, tables)
    bound = n * math.exp(EULER_GAMMA) * math.log(math.log(n))
    return InequalityReport(n=n, sigma=s, bound=bound, holds=s < bound)


def lagarias_check(n: int, tables: SieveTables | None = None) -> InequalityReport:
    """Check sigma(n) < H_n + log(H_n) * e^(H_n); needs n >= 2."""
    if n < 2:
        raise ValueError("lagarias_check requires n >= 2")
    s = _sigma_exact(n, 1, tables)
    h = float(harmonic(n))
    bound = h + math.log(h) * math.exp(h)
    return InequalityReport(n=n, sigma=s, bound=bound, holds=s < bound)
