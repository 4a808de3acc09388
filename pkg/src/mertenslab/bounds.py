"""Effective inequalities checked over exhaustive desk-scale ranges.

Every check runs in log space with a 1e-9 slack guard so float error
can never fabricate a counterexample of a proven theorem; where exact
integer arithmetic is feasible (small parameters) a zero-tolerance
big-integer pass runs alongside. Failures are reported, never raised.
"""

import math

import numpy as np

from .arith import log_factorial_table, psi_table, theta_table
from .errors import DomainError
from .outcomes import VerificationOutcome, Witness
from .partial_sums import mertens_bound_sweep
from .sieve import SieveTable
from .summation import compensated_cumsum

LOG4 = math.log(4.0)
SLACK = 1e-9


def _worst(margins: np.ndarray, inputs: np.ndarray, lhs: np.ndarray,
           rhs: np.ndarray) -> Witness:
    j = int(np.argmin(margins))
    return Witness(input=int(inputs[j]), lhs=float(lhs[j]), rhs=float(rhs[j]),
                   margin=float(margins[j]))


def _merge(a: Witness, b: Witness) -> Witness:
    return a if a.margin <= b.margin else b


def check_binomial_bounds(n_max: int) -> VerificationOutcome:
    """4^n/(2n+1) <= C(2n,n) <= 4^n for n = 1..n_max.

    Log space with slack; exact big-integer comparison for n <= 30.
    """
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    lf = log_factorial_table(2 * n_max).values
    ns = np.arange(1, n_max + 1, dtype=np.int64)
    logc = lf[2 * ns] - 2.0 * lf[ns]
    cap = ns * LOG4
    floor = cap - np.log(2.0 * ns + 1.0)
    upper = _worst(cap - logc, ns, logc, cap)
    lower = _worst(logc - floor, ns, floor, logc)
    worst = _merge(upper, lower)
    ok = worst.margin >= -SLACK
    for n in range(1, min(30, n_max) + 1):
        c = math.comb(2 * n, n)
        if not (4 ** n <= c * (2 * n + 1) and c <= 4 ** n):
            ok = False
            worst = Witness(input=n, lhs=float(c), rhs=float(4 ** n),
                            margin=-1.0)
    return VerificationOutcome("binomial-bounds", (1, n_max), ok, worst)


def check_psi_dyadic(table: SieveTable, n_max: int) -> VerificationOutcome:
    """psi(2n) - psi(n) <= 2n log 2 for n = 1..n_max."""
    if not 1 <= 2 * n_max <= table.limit:
        raise DomainError(f"2*n_max={2 * n_max} outside [2, {table.limit}]")
    psi = psi_table(table, 2 * n_max).values
    ns = np.arange(1, n_max + 1, dtype=np.int64)
    gain = psi[2 * ns] - psi[ns]
    cap = 2.0 * ns * math.log(2.0)
    worst = _worst(cap - gain, ns, gain, cap)
    return VerificationOutcome("psi-dyadic", (1, n_max),
                               worst.margin >= -SLACK, worst)


def check_psi_linear(table: SieveTable, x_max: int, c1: float = 0.3,
                     c2: float = 1.2, x_lo: int = 2) -> VerificationOutcome:
    """c1 x <= psi(x) <= c2 x on [x_lo, x_max]; constants calibrated."""
    if not x_lo <= x_max <= table.limit:
        raise DomainError(f"x_max={x_max} outside [{x_lo}, {table.limit}]")
    if not 0 < c1 < c2:
        raise DomainError(f"need 0 < c1 < c2, got ({c1}, {c2})")
    psi = psi_table(table, x_max).values
    xs = np.arange(x_lo, x_max + 1, dtype=np.int64)
    vals = psi[xs]
    lower = _worst(vals - c1 * xs, xs, c1 * xs, vals)
    upper = _worst(c2 * xs - vals, xs, vals, c2 * xs)
    worst = _merge(lower, upper)
    return VerificationOutcome("psi-linear", (x_lo, x_max),
                               worst.margin >= -SLACK, worst)


def check_primorial_bound(table: SieveTable,
                          k_max: int) -> VerificationOutcome:
    """theta(k) <= k log 4 for k = 1..k_max; exact product for k <= 60."""
    if not 1 <= k_max <= table.limit:
        raise DomainError(f"k_max={k_max} outside [1, {table.limit}]")
    theta = theta_table(table, k_max).values
    ks = np.arange(1, k_max + 1, dtype=np.int64)
    cap = ks * LOG4
    worst = _worst(cap - theta[ks], ks, theta[ks], cap)
    ok = worst.margin >= -SLACK
    primorial = 1
    for k in range(1, min(60, k_max) + 1):
        if int(table.spf[k]) == k and k >= 2:
            primorial *= k
        if primorial > 4 ** k:
            ok = False
            worst = Witness(input=k, lhs=float(primorial),
                            rhs=float(4 ** k), margin=-1.0)
    return VerificationOutcome("primorial-bound", (1, k_max), ok, worst)


def check_interval_primorial(table: SieveTable,
                             m_max: int) -> VerificationOutcome:
    """Product of primes in (m+1, 2m+1] is <= 4^m, and for m <= 30 it
    divides C(2m+1, m+1) exactly."""
    if not 1 <= 2 * m_max + 1 <= table.limit:
        raise DomainError(f"2*m_max+1={2 * m_max + 1} exceeds {table.limit}")
    theta = theta_table(table, 2 * m_max + 1).values
    ms = np.arange(1, m_max + 1, dtype=np.int64)
    gain = theta[2 * ms + 1] - theta[ms + 1]
    cap = ms * LOG4
    worst = _worst(cap - gain, ms, gain, cap)
    ok = worst.margin >= -SLACK
    for m in range(1, min(30, m_max) + 1):
        prod = 1
        for p in range(m + 2, 2 * m + 2):
            if int(table.spf[p]) == p:
                prod *= p
        binom = math.comb(2 * m + 1, m + 1)
        if binom % prod != 0 or prod > 4 ** m:
            ok = False
            worst = Witness(input=m, lhs=float(prod), rhs=float(binom),
                            margin=-1.0)
    return VerificationOutcome("interval-primorial", (1, m_max), ok, worst)


def check_stirling_lower(m_max: int) -> VerificationOutcome:
    """log(m!) > m(log m - 1), strictly, for m = 1..m_max."""
    if m_max < 1:
        raise DomainError(f"m_max must be >= 1, got {m_max}")
    lf = log_factorial_table(m_max).values
    ms = np.arange(1, m_max + 1, dtype=np.int64)
    mf = ms.astype(np.float64)
    rhs = mf * (np.log(mf) - 1.0)
    worst = _worst(lf[ms] - rhs, ms, rhs, lf[ms])
    return VerificationOutcome("stirling-lower", (1, m_max),
                               worst.margin > 0, worst)


def check_pi_upper(table: SieveTable, n_max: int,
                   chunk: int = 1 << 20) -> VerificationOutcome:
    """pi(n) <= e n / log n for n = 3..n_max."""
    if not 3 <= n_max <= table.limit:
        raise DomainError(f"n_max={n_max} outside [3, {table.limit}]")
    worst = Witness(input=3, lhs=0.0, rhs=0.0, margin=math.inf)
    for lo in range(3, n_max + 1, chunk):
        hi = min(lo + chunk, n_max + 1)
        ns = np.arange(lo, hi, dtype=np.int64)
        pis = np.searchsorted(table.primes, ns, side="right")
        cap = math.e * ns / np.log(ns.astype(np.float64))
        cand = _worst(cap - pis, ns, pis.astype(np.float64), cap)
        worst = _merge(worst, cand)
    return VerificationOutcome("pi-upper", (3, n_max), worst.margin >= 0,
                               worst)


def check_dusart(table: SieveTable, n_max: int) -> VerificationOutcome:
    """p_n < n log n + n log log n for n = 6..n_max, strictly."""
    if table.primes.size < n_max:
        raise DomainError(
            f"table holds {table.primes.size} primes, need {n_max}")
    if n_max < 6:
        raise DomainError(f"n_max must be >= 6, got {n_max}")
    ns = np.arange(6, n_max + 1, dtype=np.int64)
    pn = table.primes[5:n_max].astype(np.float64)
    nf = ns.astype(np.float64)
    cap = nf * np.log(nf) + nf * np.log(np.log(nf))
    worst = _worst(cap - pn, ns, pn, cap)
    return VerificationOutcome("dusart", (6, n_max), worst.margin > 0, worst)


def check_reciprocal_lower(table: SieveTable, n_max: int,
                           chunk: int = 1 << 20) -> VerificationOutcome:
    """S(n) >= loglog(n+1) - log(pi^2/6) for n = 2..n_max."""
    if not 2 <= n_max <= table.limit:
        raise DomainError(f"n_max={n_max} outside [2, {table.limit}]")
    cut = int(np.searchsorted(table.primes, n_max, side="right"))
    ps = table.primes[:cut]
    cum = compensated_cumsum(1.0 / ps.astype(np.float64))
    shift = math.log(math.pi * math.pi / 6.0)
    worst = Witness(input=2, lhs=0.0, rhs=0.0, margin=math.inf)
    for lo in range(2, n_max + 1, chunk):
        hi = min(lo + chunk, n_max + 1)
        ns = np.arange(lo, hi, dtype=np.int64)
        idx = np.searchsorted(ps, ns, side="right")
        s_vals = np.where(idx > 0, cum[np.maximum(idx - 1, 0)], 0.0)
        floor = np.log(np.log(ns.astype(np.float64) + 1.0)) - shift
        cand = _worst(s_vals - floor, ns, floor, s_vals)
        worst = _merge(worst, cand)
    return VerificationOutcome("reciprocal-lower", (2, n_max),
                               worst.margin >= -SLACK, worst)


def check_mertens_bound(table: SieveTable, n_max: int,
                        ceiling: float = 2.0) -> VerificationOutcome:
    """|sum (log p)/p - log n| <= 2 at every integer n in [2, n_max]."""
    return mertens_bound_sweep(table, n_max, ceiling)
