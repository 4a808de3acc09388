import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mertenslab import density as D
from mertenslab.errors import DomainError

from oracles import trial_largest_factor


def census_brute(x: int) -> int:
    return sum(1 for n in range(2, x + 1)
               if trial_largest_factor(n) ** 2 > n)


def test_has_large_prime_factor_boundaries(table_1e4):
    assert D.has_large_prime_factor(table_1e4, 10)      # 5^2 > 10
    assert not D.has_large_prime_factor(table_1e4, 4)   # 2^2 = 4, strict
    assert not D.has_large_prime_factor(table_1e4, 9)   # 3^2 = 9, strict
    for n in range(2, 1500):
        assert D.has_large_prime_factor(table_1e4, n) == \
            (trial_largest_factor(n) ** 2 > n)


def test_census_oracle_examples(table_1e4):
    assert D.census_oracle(table_1e4, 10) == 6   # 2,3,5,6,7,10
    assert D.census_oracle(table_1e4, 2) == 1
    assert D.census_oracle(table_1e4, 3) == 2
    assert D.census_oracle(table_1e4, 1000) == census_brute(1000)


def test_g_count_examples(table_1e4):
    assert D.g_count(table_1e4, 10) == 6    # 1 + 2 + 2 + 1
    assert D.g_count(table_1e4, 2) == 1     # p=2: min(1, 1)


@settings(max_examples=120, deadline=None)
@given(x=st.integers(2, 10 ** 4))
def test_bijection_pointwise(table_1e4, x):
    assert D.g_count(table_1e4, x) == D.census_oracle(table_1e4, x)


def test_g_count_all_matches_point_op(table_1e4):
    g_all = D.g_count_all(table_1e4, 3000)
    for x in range(2, 3001):
        assert int(g_all[x]) == D.g_count(table_1e4, x)


def test_split_point():
    assert D.split_point(10) == pytest.approx(3.7015621187164243, rel=1e-15)
    assert D.split_point(2) == 2.0
    with pytest.raises(DomainError):
        D.split_point(0)


@settings(max_examples=200, deadline=None)
@given(x=st.integers(1, 10 ** 9))
def test_split_point_chain(x):
    e = D.split_point(x)
    assert math.sqrt(x) < e <= 1 + x


def test_split_point_consistency(table_1e4):
    # primes with p - 1 <= floor(10/p) are exactly those below the split
    small = [p for p in (2, 3, 5, 7) if p - 1 <= 10 // p]
    below = [p for p in (2, 3, 5, 7) if p <= D.split_point(10)]
    assert small == below == [2, 3]


def test_g_count_split(table_1e4):
    assert D.g_count_split(table_1e4, 10) == (3, 3)
    assert D.g_count_split(table_1e4, 4) == (1, 1)
    for x in range(2, 2000):
        small, large = D.g_count_split(table_1e4, x)
        assert small + large == D.g_count(table_1e4, x)


def test_rough_tail_sum(table_1e4):
    assert D.rough_tail_sum(table_1e4, 10) == pytest.approx(1 / 5 + 1 / 7,
                                                            rel=1e-15)
    assert D.rough_tail_sum(table_1e4, 4) == pytest.approx(1 / 3, rel=1e-15)
    with pytest.raises(DomainError):
        D.rough_tail_sum(table_1e4, 3)


def test_density_series(table_1e6):
    rep = D.density_series(table_1e6, [10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6])
    assert rep.passed
    for row in rep.rows:
        assert abs(row.residual) <= row.tolerance == 3.0 / math.log(row.x)
    with pytest.raises(DomainError):
        D.density_series(table_1e6, [])
    with pytest.raises(DomainError):
        D.density_series(table_1e6, [1000, 1000])


def test_large_factor_census_invariants(table_1e4):
    census = D.large_factor_census(table_1e4, 1000)
    assert census.g_value == census.oracle_count == census_brute(1000)
    assert 0.0 <= census.density <= 1.0
    assert math.sqrt(1000) < census.split_point <= 1001


def test_census_rejects_mismatch():
    with pytest.raises(DomainError):
        D.LargeFactorCensus(x=10, g_value=6, oracle_count=7, density=0.6,
                            split_point=D.split_point(10))


def test_sweeps(table_1e5):
    assert D.bijection_sweep(table_1e5, 10 ** 4).passed
    assert D.split_identity_sweep(table_1e5, 2000).passed
    assert D.split_interval_sweep(table_1e5, 10 ** 5).passed
    assert D.small_part_bound_sweep(table_1e5, 10 ** 5).passed
    assert D.rough_tail_monotone_sweep(table_1e5, 5).passed


def test_split_interval_floor_identity(table_1e4):
    # any prime between sqrt x and the split point forces floor(x/p) = p - 1
    for x in range(2, 5000):
        for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                  53, 59, 61, 67, 71):
            if p * p > x and p * (p - 1) <= x:
                assert x // p == p - 1
