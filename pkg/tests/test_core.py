import math

import pytest
from hypothesis import given, strategies as st

from divsum import build_sieve, divisors, factorize, gcd, mobius, totient


def brute_mobius(n):
    """Independent mu: factor by naive division, check squarefree."""
    count = 0
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            count += 1
        else:
            d += 1
    if n > 1:
        count += 1
    return -1 if count % 2 else 1


def brute_totient(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


class TestGcd:
    def test_examples(self):
        assert gcd(12, 18) == 6
        assert gcd(7, 7) == 7
        for n in (1, 2, 97, 360):
            assert gcd(1, n) == 1

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            gcd(0, 5)
        with pytest.raises(ValueError):
            gcd(5, -1)

    @given(st.integers(1, 10**9), st.integers(1, 10**9))
    def test_symmetric_and_divides(self, a, b):
        g = gcd(a, b)
        assert g == gcd(b, a)
        assert a % g == 0 and b % g == 0


class TestSieve:
    def test_small_tables(self):
        t = build_sieve(10)
        assert list(t.mu[1:]) == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
        assert list(t.phi[1:]) == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]

    def test_degenerate_limit(self):
        t = build_sieve(1)
        assert t.limit == 1
        assert t.mu[1] == 1 and t.phi[1] == 1

    def test_prime_entries(self, sieve_2000):
        for p in (2, 3, 5, 7, 97, 1009, 1999):
            assert sieve_2000.spf[p] == p
            assert sieve_2000.phi[p] == p - 1
            assert sieve_2000.mu[p] == -1

    def test_immutable(self, sieve_2000):
        with pytest.raises(ValueError):
            sieve_2000.mu[5] = 7

    def test_matches_single_value(self, sieve_2000):
        for n in range(1, 2001):
            assert int(sieve_2000.mu[n]) == mobius(n)
            assert int(sieve_2000.phi[n]) == totient(n)

    def test_matches_brute_force(self):
        t = build_sieve(300)
        for n in range(1, 301):
            assert int(t.mu[n]) == brute_mobius(n)
            assert int(t.phi[n]) == brute_totient(n)


class TestFactorize:
    def test_examples(self):
        assert factorize(12) == [(2, 2), (3, 1)]
        assert factorize(1) == []
        assert factorize(97) == [(97, 1)]

    def test_with_tables(self, sieve_2000):
        for n in (1, 2, 12, 97, 1998, 2000):
            assert factorize(n, sieve_2000) == factorize(n)

    def test_beyond_table_limit(self, sieve_2000):
        with pytest.raises(ValueError):
            factorize(2001, sieve_2000)

    @given(st.integers(1, 10**6))
    def test_reconstructs(self, n):
        factors = factorize(n)
        prod = 1
        prev = 0
        for p, e in factors:
            assert p > prev and e >= 1
            prev = p
            prod *= p**e
        assert prod == n


class TestMobiusTotient:
    def test_examples(self):
        assert mobius(1) == 1
        assert mobius(6) == 1
        assert mobius(12) == 0
        assert totient(1) == 1
        assert totient(10) == 4
        for p in (2, 3, 5, 7, 11, 101):
            assert totient(p) == p - 1

    def test_mobius_divisor_sum(self, sieve_2000):
        # sum of mu(d) over d | n picks out n = 1
        t = build_sieve(10**4)
        for n in range(1, 10**4 + 1):
            total = sum(int(t.mu[d]) for d in divisors(n, t))
            assert total == (1 if n == 1 else 0)

    def test_totient_divisor_sum(self):
        t = build_sieve(10**4)
        for n in range(1, 10**4 + 1):
            assert sum(int(t.phi[d]) for d in divisors(n, t)) == n

    @given(st.integers(1, 500), st.integers(1, 500))
    def test_multiplicative_on_coprimes(self, a, b):
        if math.gcd(a, b) == 1:
            assert totient(a * b) == totient(a) * totient(b)
            assert mobius(a * b) == mobius(a) * mobius(b)

    def test_totient_divides_on_divisors(self):
        # d | m implies phi(d) | phi(m); Hoelder's quotient relies on this
        t = build_sieve(2000)
        for m in range(1, 2001):
            for d in divisors(m, t):
                assert totient(m, t) % totient(d, t) == 0


class TestDivisors:
    def test_basic(self):
        assert divisors(1) == [1]
        assert divisors(12) == [1, 2, 3, 4, 6, 12]
        assert divisors(97) == [1, 97]

    @given(st.integers(1, 5000))
    def test_each_divides(self, n):
        ds = divisors(n)
        assert all(n % d == 0 for d in ds)
        assert ds == sorted(set(ds))
        assert ds[0] == 1 and ds[-1] == n
