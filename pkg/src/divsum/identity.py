"""Three-way evaluation of f(n) = sum of g(d) over divisors d of n.

Methods:
  oracle -- explicit divisor enumeration (the definition).
  eq8    -- sum over b = 1..n of c_b(n) * sum_{u <= n/b} g(bu)/(bu), with
            c_b(n) the Ramanujan sum.
  eq9    -- the same sum with the Ramanujan coefficient written out as
            mu(k/(n,k)) * phi(k)/phi(k/(n,k)).

Values are carried in one of three domains: exact rationals (gmpy2.mpq),
floats (compensated summation), or exact prime-log coefficient vectors
for log-valued g.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Literal

from gmpy2 import mpq

from .core import SieveTables, build_sieve, divisors, factorize, gcd, mobius, totient
from .ramanujan import ramanujan_holder

__all__ = [
    "EvalReport",
    "GSpec",
    "LogCoeffVector",
    "SweepCache",
    "divisor_sum_oracle",
    "eval_identity",
    "render_value",
    "values_agree",
    "verify_range",
]

Domain = Literal["exact", "float", "logcoeff"]
Method = Literal["eq8", "eq9"]


class LogCoeffVector:
    """Exact number of the form sum over primes p of c_p * log(p).

    The c_p are rationals; since the log(p) are linearly independent over
    the rationals, two such numbers are equal iff their coefficient maps
    are equal, which makes log-valued identities exactly checkable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, mpq] | None = None):
        self.coeffs = {p: c for p, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def log_of(cls, m: int, tables: SieveTables | None = None) -> "LogCoeffVector":
        """log(m) expanded over m's prime factorization."""
        return cls({p: mpq(e) for p, e in factorize(m, tables)})

    def copy(self) -> "LogCoeffVector":
        out = LogCoeffVector()
        out.coeffs = dict(self.coeffs)
        return out

    def add_scaled(self, other: "LogCoeffVector", scalar) -> None:
        """In-place self += scalar * other."""
        if scalar == 0:
            return
        coeffs = self.coeffs
        for p, c in other.coeffs.items():
            new = coeffs.get(p, 0) + scalar * c
            if new == 0:
                coeffs.pop(p, None)
            else:
                coeffs[p] = new

    def __add__(self, other: "LogCoeffVector") -> "LogCoeffVector":
        out = self.copy()
        out.add_scaled(other, 1)
        return out

    def __mul__(self, scalar) -> "LogCoeffVector":
        out = LogCoeffVector()
        out.add_scaled(self, scalar)
        return out

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, LogCoeffVector) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __float__(self) -> float:
        return math.fsum(float(c) * math.log(p) for p, c in self.coeffs.items())

    def __repr__(self) -> str:
        if not self.coeffs:
            return "LogCoeffVector(0)"
        terms = " + ".join(f"({c})*log{p}" for p, c in sorted(self.coeffs.items()))
        return f"LogCoeffVector({terms})"


@dataclass(frozen=True)
class GSpec:
    """Descriptor of the inner arithmetic function g and its value domain."""

    kind: Literal["power", "log", "mobius", "custom"]
    gamma: float | None = None
    func: Callable[[int], object] | None = None
    domain: Domain = "exact"

    def __post_init__(self):
        if self.domain not in ("exact", "float", "logcoeff"):
            raise ValueError(f"unknown domain {self.domain!r}")
        if self.kind == "power":
            if self.gamma is None:
                raise ValueError("power g requires gamma")
            integral = float(self.gamma) == int(self.gamma)
            if self.domain == "exact" and not (integral and self.gamma >= 0):
                raise ValueError("exact domain requires integer gamma >= 0")
            if self.domain == "logcoeff":
                raise ValueError("power g has no log-coefficient representation")
        elif self.kind == "log":
            if self.domain not in ("float", "logcoeff"):
                raise ValueError("log g must use float or logcoeff domain")
        elif self.kind == "mobius":
            if self.domain == "logcoeff":
                raise ValueError("mobius g has no log-coefficient representation")
        elif self.kind == "custom":
            if self.func is None:
                raise ValueError("custom g requires a callable")
        else:
            raise ValueError(f"unknown g kind {self.kind!r}")

    @classmethod
    def power(cls, gamma, domain: Domain | None = None) -> "GSpec":
        if domain is None:
            integral = float(gamma) == int(gamma)
            domain = "exact" if (integral and gamma >= 0) else "float"
        if float(gamma) == int(gamma):
            gamma = int(gamma)
        return cls(kind="power", gamma=gamma, domain=domain)

    @classmethod
    def log(cls, domain: Domain = "logcoeff") -> "GSpec":
        return cls(kind="log", domain=domain)

    @classmethod
    def mobius(cls, domain: Domain = "exact") -> "GSpec":
        return cls(kind="mobius", domain=domain)

    @classmethod
    def custom(cls, func: Callable[[int], object], domain: Domain) -> "GSpec":
        return cls(kind="custom", func=func, domain=domain)

    def describe(self) -> str:
        if self.kind == "power":
            return f"power:{self.gamma}"
        return self.kind


def g_value(g: GSpec, m: int, tables: SieveTables | None = None):
    """g(m) in g's value domain."""
    if g.kind == "power":
        if g.domain == "exact":
            return mpq(m) ** int(g.gamma)
        return float(m) ** g.gamma
    if g.kind == "log":
        if g.domain == "logcoeff":
            return LogCoeffVector.log_of(m, tables)
        return math.log(m)
    if g.kind == "mobius":
        mu = mobius(m, tables)
        return mpq(mu) if g.domain == "exact" else float(mu)
    return g.func(m)


def divisor_sum_oracle(n: int, g: GSpec, tables: SieveTables | None = None):
    """f(n) by explicit divisor enumeration, in g's domain."""
    if n < 1:
        raise ValueError("n must be >= 1")
    divs = divisors(n, tables)
    if g.domain == "float":
        return math.fsum(g_value(g, d, tables) for d in divs)
    if g.domain == "logcoeff":
        acc = LogCoeffVector()
        for d in divs:
            acc.add_scaled(g_value(g, d, tables), 1)
        return acc
    return sum((g_value(g, d, tables) for d in divs), mpq(0))


class SweepCache:
    """Shared state for evaluating the identity at many n with one g.

    Holds the sieve tables plus lazily extended per-k prefix sums
    P_k[m] = sum_{l=1..m} g(kl)/(kl).  Purely an accelerator: results are
    identical with or without it.
    """

    def __init__(self, g: GSpec, tables: SieveTables):
        self.g = g
        self.tables = tables
        self._prefix: dict[int, list] = {}

    def inner_sum(self, k: int, m: int):
        """sum_{l=1..m} g(kl)/(kl); kl never exceeds k*m."""
        prefix = self._prefix.get(k)
        if prefix is None:
            zero = LogCoeffVector() if self.g.domain == "logcoeff" else (
                0.0 if self.g.domain == "float" else mpq(0)
            )
            prefix = [zero]
            self._prefix[k] = prefix
        g, tables = self.g, self.tables
        for l in range(len(prefix), m + 1):
            kl = k * l
            if g.domain == "logcoeff":
                term = prefix[-1].copy()
                term.add_scaled(g_value(g, kl, tables), mpq(1, kl))
            else:
                term = prefix[-1] + g_value(g, kl, tables) / kl
            prefix.append(term)
        return prefix[m]


def holder_coefficient(n: int, k: int, tables: SieveTables | None = None) -> int:
    """mu(k/(n,k)) * phi(k)/phi(k/(n,k)) with the division checked exact."""
    r = k // gcd(n, k)
    mu = mobius(r, tables)
    if mu == 0:
        return 0
    quot, rem = divmod(totient(k, tables), totient(r, tables))
    if rem:
        raise ArithmeticError(f"phi({r}) does not divide phi({k})")
    return mu * quot


def eval_identity(
    n: int,
    g: GSpec,
    method: Method = "eq9",
    tables: SieveTables | None = None,
    cache: SweepCache | None = None,
):
    """f(n) via the finite identity, in g's domain.

    eq9 computes the Hoelder coefficient inline; eq8 goes through the
    Ramanujan-sum routine.  Both read g only at arguments <= n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if method not in ("eq8", "eq9"):
        raise ValueError(f"unknown method {method!r}")
    if cache is not None:
        if cache.g is not g and cache.g != g:
            raise ValueError("cache was built for a different g")
        tables = cache.tables
    if tables is None or tables.limit < n:
        tables = build_sieve(n)
    if cache is None:
        cache = SweepCache(g, tables)

    if g.domain == "float":
        terms = []
        for k in range(1, n + 1):
            coeff = (
                ramanujan_holder(k, n, tables)
                if method == "eq8"
                else holder_coefficient(n, k, tables)
            )
            if coeff:
                terms.append(coeff * cache.inner_sum(k, n // k))
        return math.fsum(terms)

    if g.domain == "logcoeff":
        acc = LogCoeffVector()
        for k in range(1, n + 1):
            coeff = (
                ramanujan_holder(k, n, tables)
                if method == "eq8"
                else holder_coefficient(n, k, tables)
            )
            if coeff:
                acc.add_scaled(cache.inner_sum(k, n // k), coeff)
        return acc

    total = mpq(0)
    for k in range(1, n + 1):
        coeff = (
            ramanujan_holder(k, n, tables)
            if method == "eq8"
            else holder_coefficient(n, k, tables)
        )
        if coeff:
            total += coeff * cache.inner_sum(k, n // k)
    return total


def render_value(value) -> str:
    """Serialize a domain value: exact rationals as 'p/q', floats with
    17 significant digits."""
    if isinstance(value, mpq):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return f"{value:.17g}"
    if isinstance(value, LogCoeffVector):
        return repr(value)
    return str(value)


def values_agree(value, oracle, domain: Domain, tolerance: float) -> bool:
    """Exact equality for exact domains, relative tolerance for floats."""
    if domain == "float":
        return abs(value - oracle) <= tolerance * (1 + abs(oracle))
    return value == oracle


@dataclass
class EvalReport:
    n: int
    method: str
    value: object
    oracle: object
    agrees_with_oracle: bool
    elapsed: float

    def rendered(self) -> str:
        return render_value(self.value)


def verify_range(
    n_max: int,
    g: GSpec,
    method: Method = "eq9",
    tolerance: float = 1e-8,
    tables: SieveTables | None = None,
) -> list[EvalReport]:
    """Evaluate the identity for every n = 1..n_max against the oracle."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if tables is None or tables.limit < n_max:
        tables = build_sieve(n_max)
    cache = SweepCache(g, tables)
    reports = []
    for n in range(1, n_max + 1):
        start = time.perf_counter()
        value = eval_identity(n, g, method, cache=cache)
        elapsed = time.perf_counter() - start
        oracle = divisor_sum_oracle(n, g, tables)
        reports.append(
            EvalReport(
                n=n,
                method=method,
                value=value,
                oracle=oracle,
                agrees_with_oracle=values_agree(value, oracle, g.domain, tolerance),
                elapsed=elapsed,
            )
        )
    return reports
