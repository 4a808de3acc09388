import pytest

from mertenslab.sieve import build_sieve


@pytest.fixture(scope="session")
def table_1e4():
    return build_sieve(10 ** 4)


@pytest.fixture(scope="session")
def table_1e5():
    return build_sieve(10 ** 5)


@pytest.fixture(scope="session")
def table_1e6():
    return build_sieve(10 ** 6)


@pytest.fixture(scope="session")
def table_2e7():
    # covers the 1e7 sweeps and the 10^6-th prime (15,485,863)
    return build_sieve(2 * 10 ** 7)
