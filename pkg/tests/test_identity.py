import math

import pytest
from gmpy2 import mpq

from divsum import (
    GSpec,
    LogCoeffVector,
    SweepCache,
    divisor_sum_oracle,
    eval_identity,
    verify_range,
)


class TestGSpec:
    def test_power_domain_defaults(self):
        assert GSpec.power(2).domain == "exact"
        assert GSpec.power(0.5).domain == "float"
        assert GSpec.log().domain == "logcoeff"
        assert GSpec.mobius().domain == "exact"

    def test_invalid_combinations(self):
        with pytest.raises(ValueError):
            GSpec(kind="power", gamma=0.5, domain="exact")
        with pytest.raises(ValueError):
            GSpec(kind="power", gamma=-1, domain="exact")
        with pytest.raises(ValueError):
            GSpec(kind="log", domain="exact")
        with pytest.raises(ValueError):
            GSpec(kind="mobius", domain="logcoeff")
        with pytest.raises(ValueError):
            GSpec(kind="custom", domain="exact")
        with pytest.raises(ValueError):
            GSpec(kind="power", domain="float")


class TestLogCoeffVector:
    def test_log_of(self):
        v = LogCoeffVector.log_of(12)
        assert v.coeffs == {2: 2, 3: 1}
        assert LogCoeffVector.log_of(1).is_zero()

    def test_float_value(self):
        assert float(LogCoeffVector.log_of(360)) == pytest.approx(math.log(360))

    def test_arithmetic(self):
        v = LogCoeffVector.log_of(6) * mpq(1, 2)
        w = v + v
        assert w == LogCoeffVector.log_of(6)
        w.add_scaled(LogCoeffVector.log_of(6), -1)
        assert w.is_zero()


class TestOracle:
    def test_examples(self, sieve_2000):
        assert divisor_sum_oracle(6, GSpec.power(1)) == 12
        assert divisor_sum_oracle(12, GSpec.power(0)) == 6
        g = GSpec.custom(lambda m: mpq(7) if m == 1 else mpq(0), "exact")
        assert divisor_sum_oracle(1, g) == 7

    def test_log_oracle_is_log_of_divisor_product(self):
        # product of divisors of 12 is 1728 = 2^6 * 3^3
        v = divisor_sum_oracle(12, GSpec.log("logcoeff"))
        assert v == LogCoeffVector({2: mpq(6), 3: mpq(3)})


class TestEvalIdentity:
    def test_examples(self, sieve_2000):
        assert eval_identity(6, GSpec.power(1), "eq9", sieve_2000) == 12
        assert eval_identity(10, GSpec.mobius(), "eq8", sieve_2000) == 0

    def test_n_equals_one(self):
        g = GSpec.custom(lambda m: mpq(5), "exact")
        assert eval_identity(1, g, "eq8") == 5
        assert eval_identity(1, g, "eq9") == 5

    def test_bad_method(self):
        with pytest.raises(ValueError):
            eval_identity(5, GSpec.power(1), "eq7")

    @pytest.mark.parametrize("gamma", [0, 1, 2])
    def test_power_sweep_matches_oracle(self, sieve_2000, gamma):
        g = GSpec.power(gamma)
        cache = SweepCache(g, sieve_2000)
        for n in range(1, 201):
            want = divisor_sum_oracle(n, g, sieve_2000)
            assert eval_identity(n, g, "eq9", cache=cache) == want

    def test_mobius_sweep_matches_oracle(self, sieve_2000):
        g = GSpec.mobius()
        cache = SweepCache(g, sieve_2000)
        for n in range(1, 201):
            want = divisor_sum_oracle(n, g, sieve_2000)
            assert eval_identity(n, g, "eq9", cache=cache) == want
            assert want == (1 if n == 1 else 0)

    def test_eq8_equals_eq9(self, sieve_2000):
        for g in (GSpec.power(0), GSpec.power(1), GSpec.mobius()):
            c8 = SweepCache(g, sieve_2000)
            c9 = SweepCache(g, sieve_2000)
            for n in range(1, 151):
                assert eval_identity(n, g, "eq8", cache=c8) == eval_identity(
                    n, g, "eq9", cache=c9
                )

    def test_log_domain_exact(self, sieve_2000):
        g = GSpec.log("logcoeff")
        cache = SweepCache(g, sieve_2000)
        for n in range(1, 101):
            assert eval_identity(n, g, "eq9", cache=cache) == divisor_sum_oracle(
                n, g, sieve_2000
            )

    def test_float_domain_tolerance(self, sieve_2000):
        g = GSpec.power(0.5)
        cache = SweepCache(g, sieve_2000)
        for n in range(1, 201):
            got = eval_identity(n, g, "eq9", cache=cache)
            want = divisor_sum_oracle(n, g, sieve_2000)
            assert abs(got - want) <= 1e-8 * (1 + abs(want))

    def test_never_reads_g_beyond_n(self):
        # kl <= k * floor(n/k) <= n, so g must never see a larger argument
        for n in (1, 7, 36, 97):
            seen = []

            def g_func(m):
                seen.append(m)
                return mpq(1)

            g = GSpec.custom(g_func, "exact")
            eval_identity(n, g, "eq9")
            eval_identity(n, g, "eq8")
            assert max(seen) <= n

    def test_cache_mismatch_rejected(self, sieve_2000):
        cache = SweepCache(GSpec.power(1), sieve_2000)
        with pytest.raises(ValueError):
            eval_identity(5, GSpec.power(2), "eq9", cache=cache)


class TestVerifyRange:
    def test_sweep_reports(self):
        reports = verify_range(100, GSpec.power(1), "eq9")
        assert len(reports) == 100
        assert all(r.agrees_with_oracle for r in reports)
        assert [r.n for r in reports] == list(range(1, 101))
        assert reports[5].value == 12  # sigma(6)

    def test_divisor_count_sweep(self):
        reports = verify_range(50, GSpec.power(0), "eq8")
        assert all(r.agrees_with_oracle for r in reports)

    def test_float_sweep(self):
        reports = verify_range(60, GSpec.power(0.5), "eq9", tolerance=1e-8)
        assert all(r.agrees_with_oracle for r in reports)

    def test_log_trivial(self):
        reports = verify_range(1, GSpec.log("float"))
        assert len(reports) == 1
        assert reports[0].value == pytest.approx(0.0)
        assert reports[0].agrees_with_oracle
