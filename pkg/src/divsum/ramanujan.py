"""Ramanujan sums c_q(n) by three independent routes.

ramanujan_holder is the exact closed form used by the identity engine;
ramanujan_direct (complex exponential sum over coprime residues) and
ramanujan_divisor_form (sum of d*mu(q/d) over d | gcd(q,n)) exist as
independent oracles and must agree with it.
"""

from __future__ import annotations

import numpy as np

from .core import SieveTables, divisors, gcd, mobius, totient

__all__ = [
    "DIRECT_MAX_Q",
    "ramanujan_direct",
    "ramanujan_divisor_form",
    "ramanujan_holder",
]

# Guard on the naive float summation; beyond this the direct oracle is
# both slow and numerically pointless.
DIRECT_MAX_Q = 10**6


def ramanujan_holder(q: int, n: int, tables: SieveTables | None = None) -> int:
    """c_q(n) = mu(q/(q,n)) * phi(q) / phi(q/(q,n)), exactly."""
    d = gcd(q, n)
    r = q // d
    m = mobius(r, tables)
    if m == 0:
        return 0
    quot, rem = divmod(totient(q, tables), totient(r, tables))
    if rem:
        raise ArithmeticError(
            f"phi({r}) does not divide phi({q}); divisibility invariant broken"
        )
    return m * quot


def ramanujan_direct(q: int, n: int) -> tuple[float, float]:
    """c_q(n) as the exponential sum over residues coprime to q.

    Returns (real, imaginary); the imaginary part is ~0 up to rounding.
    """
    if q < 1 or n < 1:
        raise ValueError("q and n must be >= 1")
    if q > DIRECT_MAX_Q:
        raise ValueError(f"q={q} exceeds direct-summation guard {DIRECT_MAX_Q}")
    a = np.arange(1, q + 1, dtype=np.int64)
    a = a[np.gcd(a, q) == 1]
    # exp(2 pi i a n / q) depends on n only mod q; reducing keeps the
    # float phase argument small.
    z = np.exp((2j * np.pi / q) * (a * (n % q))).sum()
    return float(z.real), float(z.imag)


def ramanujan_divisor_form(q: int, n: int, tables: SieveTables | None = None) -> int:
    """c_q(n) = sum of d * mu(q/d) over divisors d of gcd(q, n)."""
    return sum(d * mobius(q // d, tables) for d in divisors(gcd(q, n), tables))
