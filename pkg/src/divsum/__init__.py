"""Finite-sum identities for divisor-sum arithmetic functions.

Evaluates f(n) = sum of g(d) over divisors d of n through a finite sum
indexed over all k <= n with Ramanujan-sum coefficients, verifies the
identity exactly against divisor enumeration, and provides the classical
specializations (sigma_gamma, d, log of the divisor product, a
Kronecker-delta identity, a truncated sigma series) plus Robin and
Lagarias inequality checkers.
"""

from .applications import (
    EULER_GAMMA,
    InequalityReport,
    divisor_count,
    harmonic,
    kronecker_delta,
    lagarias_check,
    log_product_divisors,
    robin_check,
    sigma,
    sigma_gamma,
    sigma_range,
    sigma_series_partial,
    zero_identity_residual,
)
from .core import (
    BigRational,
    SieveTables,
    build_sieve,
    divisors,
    factorize,
    gcd,
    mobius,
    totient,
)
from .identity import (
    EvalReport,
    GSpec,
    LogCoeffVector,
    SweepCache,
    divisor_sum_oracle,
    eval_identity,
    verify_range,
)
from .ramanujan import ramanujan_direct, ramanujan_divisor_form, ramanujan_holder

__version__ = "0.1.0"

__all__ = [
    "BigRational",
    "EULER_GAMMA",
    "EvalReport",
    "GSpec",
    "InequalityReport",
    "LogCoeffVector",
    "SieveTables",
    "SweepCache",
    "build_sieve",
    "divisor_count",
    "divisor_sum_oracle",
    "divisors",
    "eval_identity",
    "factorize",
    "gcd",
    "harmonic",
    "kronecker_delta",
    "lagarias_check",
    "log_product_divisors",
    "mobius",
    "ramanujan_direct",
    "ramanujan_divisor_form",
    "ramanujan_holder",
    "robin_check",
    "sigma",
    "sigma_gamma",
    "sigma_range",
    "sigma_series_partial",
    "totient",
    "verify_range",
    "zero_identity_residual",
]
