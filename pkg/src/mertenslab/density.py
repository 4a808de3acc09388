"""Integers whose largest prime factor exceeds their square root.

Two independent counting routes: a census by explicit factorization of
every n <= x, and the pair count G(x) = sum over primes of
min(p-1, floor(x/p)). The bijection between them is exact, so the
suites compare integer against integer with zero tolerance. All
square-root threshold comparisons are done in integer arithmetic
(p*p vs n) so perfect squares can never be misclassified.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .outcomes import VerificationOutcome, Witness
from .partial_sums import LOG2, ResidualLaw, ResidualReport, ResidualRow
from .sieve import SieveTable, largest_factor_range
from .summation import fsum


@dataclass(frozen=True)
class LargeFactorCensus:
    """One sample of the large-factor population at x."""

    x: int
    g_value: int
    oracle_count: int | None
    density: float
    split_point: float

    def __post_init__(self):
        if self.oracle_count is not None and self.oracle_count != self.g_value:
            raise DomainError(
                f"pair count {self.g_value} != census {self.oracle_count} "
                f"at x={self.x}: the bijection is exact")
        if not 0.0 <= self.density <= 1.0:
            raise DomainError(f"density {self.density} outside [0, 1]")
        if not math.sqrt(self.x) < self.split_point <= 1 + self.x:
            raise DomainError(
                f"split point {self.split_point} outside (sqrt x, 1 + x]")


def has_large_prime_factor(table: SieveTable, n: int) -> bool:
    """True iff the largest prime factor p of n satisfies p*p > n."""
    table.check_range(n)
    m = n
    p = 0
    spf = table.spf
    while m > 1:
        p = int(spf[m])
        while m % p == 0:
            m //= p
    return p * p > n


def census_oracle(table: SieveTable, x: int, block: int = 1 << 20) -> int:
    """Exact count of n in [2, x] with a large prime factor, by
    factorizing every n through the SPF table."""
    table.check_range(x)
    count = 0
    for lo in range(2, x + 1, block):
        hi = min(lo + block, x + 1)
        lpf = largest_factor_range(table, lo, hi)
        ns = np.arange(lo, hi, dtype=np.int64)
        count += int(np.count_nonzero(lpf * lpf > ns))
    return count


def g_count(table: SieveTable, x: int) -> int:
    """Pairs (p, q) with q < p <= x/q: sum of min(p-1, floor(x/p))."""
    table.check_range(x)
    cut = int(np.searchsorted(table.primes, x, side="right"))
    ps = table.primes[:cut]
    return int(np.minimum(ps - 1, x // ps).sum())


def split_point(x: int) -> float:
    """Split point 1/2 + sqrt(1/4 + x); always in (sqrt x, 1 + x]."""
    if x < 1:
        raise DomainError(f"split point needs x >= 1, got {x}")
    return 0.5 + math.sqrt(0.25 + x)


def g_count_split(table: SieveTable, x: int) -> tuple[int, int]:
    """The two halves of the pair count: (p-1) below sqrt x, floors above.

    Thresholds are exact: p <= sqrt x iff p*p <= x.
    """
    table.check_range(x)
    cut = int(np.searchsorted(table.primes, x, side="right"))
    ps = table.primes[:cut]
    below = ps[ps * ps <= x]
    above = ps[ps * ps > x]
    small = int((below - 1).sum())
    large = int((x // above).sum())
    return small, large


def rough_tail_sum(table: SieveTable, n: int) -> float:
    """Sum of 1/p over primes with sqrt n < p <= n; tends to log 2."""
    if n < 4:
        raise DomainError(f"tail sum needs n >= 4, got {n}")
    table.check_range(n)
    lo = int(np.searchsorted(table.primes, math.isqrt(n), side="right"))
    hi = int(np.searchsorted(table.primes, n, side="right"))
    return fsum(1.0 / table.primes[lo:hi].astype(np.float64))


def large_factor_census(table: SieveTable, x: int,
                        with_oracle: bool = True) -> LargeFactorCensus:
    g = g_count(table, x)
    oracle = census_oracle(table, x) if with_oracle else None
    return LargeFactorCensus(x=x, g_value=g, oracle_count=oracle,
                             density=g / x, split_point=split_point(x))


def density_series(table: SieveTable, xs: list[int],
                   c: float = 3.0) -> ResidualReport:
    """G(x)/x against log 2 with the calibrated c/log x envelope.

    Note the approach to log 2 is not monotone in x: the positive
    pi(sqrt x) sqrt x contribution peaks around x ~ 1e5 before the
    envelope squeezes it, so pass means inside-the-envelope only.
    """
    if not xs:
        raise DomainError("xs must be non-empty")
    if any(b <= a for a, b in zip(xs, xs[1:])):
        raise DomainError("xs must be strictly increasing")
    if xs[0] < 100 or xs[-1] > table.limit:
        raise DomainError(f"xs must lie in [100, {table.limit}]")
    rows = []
    for x in xs:
        observed = g_count(table, x) / x
        rows.append(ResidualRow(x, observed, LOG2, observed - LOG2,
                                c / math.log(x)))
    passed = all(abs(r.residual) <= r.tolerance for r in rows)
    return ResidualReport(ResidualLaw.DENSITY_LOG2, rows, passed)


# ---------------------------------------------------------------------------
# exhaustive sweeps


def g_count_all(table: SieveTable, x_max: int) -> np.ndarray:
    """G(x) for every x = 0..x_max in one pass.

    min(p-1, floor(x/p)) counts the multiples kp <= x with k <= p-1, so
    each prime contributes +1 steps at p, 2p, ..., (p-1)p; a difference
    array turns that into G for all x at once. Pure algebra on the pair
    count, independent of any factorization.
    """
    table.check_range(x_max)
    diff = np.zeros(x_max + 1, dtype=np.int64)
    cut = int(np.searchsorted(table.primes, x_max, side="right"))
    for p in table.primes[:cut].tolist():
        stop = min(p * (p - 1), x_max) + 1
        diff[p:stop:p] += 1
    return np.cumsum(diff)


def bijection_sweep(table: SieveTable, x_max: int,
                    spots: tuple[int, ...] = ()) -> VerificationOutcome:
    """g_count(x) == census_oracle(x) for every x <= x_max, exactly,
    plus spot checks at the given larger x values."""
    table.check_range(x_max)
    g_all = g_count_all(table, x_max)
    member = np.zeros(x_max + 1, dtype=np.int64)
    for lo in range(2, x_max + 1, 1 << 20):
        hi = min(lo + (1 << 20), x_max + 1)
        lpf = largest_factor_range(table, lo, hi)
        ns = np.arange(lo, hi, dtype=np.int64)
        member[lo:hi] = lpf * lpf > ns
    census_all = np.cumsum(member)
    bad = np.flatnonzero(g_all[2:] != census_all[2:])
    if bad.size:
        x = int(bad[0]) + 2
        w = Witness(input=x, lhs=float(g_all[x]), rhs=float(census_all[x]),
                    margin=-abs(float(g_all[x] - census_all[x])))
        return VerificationOutcome("pair-bijection", (2, x_max), False, w)
    hi_end = x_max
    for x in spots:
        hi_end = max(hi_end, x)
        g = g_count(table, x)
        oracle = census_oracle(table, x)
        if g != oracle:
            w = Witness(input=x, lhs=float(g), rhs=float(oracle),
                        margin=-abs(float(g - oracle)))
            return VerificationOutcome("pair-bijection", (2, hi_end), False, w)
    w = Witness(input=x_max, lhs=float(g_all[x_max]), rhs=float(g_all[x_max]),
                margin=0.0)
    return VerificationOutcome("pair-bijection", (2, hi_end), True, w)


def split_identity_sweep(table: SieveTable, x_max: int) -> VerificationOutcome:
    """small + large parts reassemble g_count(x) exactly, all x <= x_max."""
    table.check_range(x_max)
    g_all = g_count_all(table, x_max)
    for x in range(2, x_max + 1):
        small, large = g_count_split(table, x)
        if small + large != int(g_all[x]):
            w = Witness(input=x, lhs=float(small + large),
                        rhs=float(g_all[x]),
                        margin=-abs(float(small + large - g_all[x])))
            return VerificationOutcome("split-identity", (2, x_max), False, w)
    w = Witness(input=x_max, lhs=float(g_all[x_max]), rhs=float(g_all[x_max]),
                margin=0.0)
    return VerificationOutcome("split-identity", (2, x_max), True, w)


def split_interval_sweep(table: SieveTable, x_max: int) -> VerificationOutcome:
    """At most one prime lies in (sqrt x, split_point(x)] for every x <= x_max,
    and any such prime p has floor(x/p) = p - 1.

    p in the interval iff p*p > x and p(p-1) <= x, i.e. x in
    [p^2 - p, p^2 - 1]: integer arithmetic throughout.
    """
    table.check_range(x_max)
    counts = np.zeros(x_max + 1, dtype=np.int64)
    cut = int(np.searchsorted(table.primes, math.isqrt(x_max) + 1,
                              side="right"))
    for p in table.primes[:cut].tolist():
        lo = p * p - p
        if lo > x_max:
            break
        hi = min(p * p - 1, x_max)
        counts[lo:hi + 1] += 1
        xs = np.arange(lo, hi + 1, dtype=np.int64)
        floors = xs // p
        if not np.all(floors == p - 1):
            x = int(xs[int(np.argmax(floors != p - 1))])
            w = Witness(input=x, lhs=float(x // p), rhs=float(p - 1),
                        margin=-abs(float(x // p - (p - 1))))
            return VerificationOutcome("split-interval", (2, x_max), False, w)
    worst = int(np.argmax(counts[2:])) + 2
    ok = bool(counts[worst] <= 1)
    w = Witness(input=worst, lhs=float(counts[worst]), rhs=1.0,
                margin=1.0 - float(counts[worst]))
    return VerificationOutcome("split-interval", (2, x_max), ok, w)


def small_part_bound_sweep(table: SieveTable, x_max: int,
                           x_min: int = 10) -> VerificationOutcome:
    """sum_{p <= sqrt x}(p-1) <= pi(sqrt x) sqrt x <= e x / log(sqrt x)."""
    if not x_min <= x_max <= table.limit:
        raise DomainError(f"x_max={x_max} outside [{x_min}, {table.limit}]")
    cut = int(np.searchsorted(table.primes, math.isqrt(x_max), side="right"))
    roots = table.primes[:cut]
    squares = roots * roots
    small_cum = np.cumsum(roots - 1)
    worst = Witness(input=x_min, lhs=0.0, rhs=0.0, margin=math.inf)
    ok = True
    for lo in range(x_min, x_max + 1, 1 << 20):
        hi = min(lo + (1 << 20), x_max + 1)
        xs = np.arange(lo, hi, dtype=np.int64)
        idx = np.searchsorted(squares, xs, side="right")
        small = np.where(idx > 0, small_cum[np.maximum(idx - 1, 0)], 0)
        sqrt_x = np.sqrt(xs.astype(np.float64))
        mid = idx * sqrt_x                      # pi(sqrt x) * sqrt x
        top = math.e * xs / np.log(sqrt_x)
        m1 = mid - small
        m2 = top - mid
        margins = np.minimum(m1, m2)
        j = int(np.argmin(margins))
        if margins[j] < worst.margin:
            if m1[j] <= m2[j]:
                worst = Witness(int(xs[j]), float(small[j]), float(mid[j]),
                                float(m1[j]))
            else:
                worst = Witness(int(xs[j]), float(mid[j]), float(top[j]),
                                float(m2[j]))
            ok = worst.margin >= 0
    return VerificationOutcome("small-part-bound", (x_min, x_max), ok, worst)


def rough_tail_monotone_sweep(table: SieveTable,
                              k_max: int) -> VerificationOutcome:
    """|rough tail - log 2| strictly decreasing over decades 10^2..10^k."""
    if 10 ** k_max > table.limit:
        raise DomainError(f"10^{k_max} exceeds table limit {table.limit}")
    resids = [abs(rough_tail_sum(table, 10 ** k) - LOG2)
              for k in range(2, k_max + 1)]
    ok = all(b < a for a, b in zip(resids, resids[1:]))
    worst = Witness(input=10 ** k_max, lhs=resids[-1], rhs=resids[0],
                    margin=resids[0] - resids[-1])
    return VerificationOutcome("rough-tail-monotone", (100, 10 ** k_max), ok,
                               worst)
