import pytest

from divsum import build_sieve


@pytest.fixture(scope="session")
def sieve_2000():
    return build_sieve(2000)


@pytest.fixture(scope="session")
def sieve_500(sieve_2000):
    # any table covering 500 works; reuse the bigger one
    return sieve_2000
