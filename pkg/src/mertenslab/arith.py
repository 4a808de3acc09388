"""The classical arithmetic functions over a sieve table.

Point evaluations of the von Mangoldt and Moebius functions, Legendre
valuations, both log-factorial routes, the Chebyshev functions, and the
Selberg / generalized von Mangoldt divisor sums, plus the vectorized
sweep variants the verification suites run over exhaustive ranges.
"""

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError
from .outcomes import VerificationOutcome, Witness
from .sieve import Factorization, SieveTable, factorize
from .summation import compensated_cumsum, fsum


@dataclass(frozen=True)
class LambdaValue:
    """Value of the prime-power log weight at n.

    base_prime is p when n = p^alpha (alpha >= 1) and None otherwise;
    value is log(base_prime) or 0 correspondingly.
    """

    n: int
    value: float
    base_prime: int | None = None


class TableKind(Enum):
    PSI = "psi"
    THETA = "theta"
    PI_COUNT = "pi-count"
    LOG_FACTORIAL = "log-factorial"


class Arithmetic(Enum):
    EXACT_INTEGER = "exact-integer"
    COMPENSATED_FLOAT = "compensated-float"


@dataclass(frozen=True)
class CumulativeTable:
    kind: TableKind
    limit: int
    values: np.ndarray          # index 0..limit, non-decreasing
    arithmetic: Arithmetic


def is_prime(n: int) -> bool:
    """Trial division; used where no sieve table is in scope."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def von_mangoldt(table: SieveTable, n: int) -> LambdaValue:
    """log p when n = p^alpha, else 0; detection by repeated SPF division."""
    table.check_range(n, lo=1)
    if n == 1:
        return LambdaValue(n=1, value=0.0)
    p = int(table.spf[n])
    m = n
    while m % p == 0:
        m //= p
    if m == 1:
        return LambdaValue(n=n, value=math.log(p), base_prime=p)
    return LambdaValue(n=n, value=0.0)


def mobius(table: SieveTable, n: int) -> int:
    """+-1 for squarefree n by parity of the factor count, 0 otherwise."""
    table.check_range(n, lo=1)
    if n == 1:
        return 1
    factors = factorize(table, n).factors
    if any(e >= 2 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def legendre_valuation(p: int, n: int) -> int:
    """Exponent of the prime p in n!: sum of floor(n / p^k)."""
    if not is_prime(p):
        raise DomainError(f"p={p} is not prime")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    total = 0
    pk = p
    while pk <= n:
        total += n // pk
        pk *= p
    return total


def log_factorial_direct(n: int) -> float:
    """log(n!) summed term by term; empty product at n = 0 gives 0."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if n < 2:
        return 0.0
    return fsum(np.log(np.arange(2, n + 1, dtype=np.float64)))


def prime_power_terms(table: SieveTable, x: int):
    """All prime powers m = p^k <= x and their log p.

    Returns (ms, logs) as int64/float64 arrays, primes first, then the
    higher powers grouped by p ascending. log p reuses the k = 1 value
    so a power and its base carry bit-identical weights.
    """
    if x < 2:
        return (np.empty(0, dtype=np.int64), np.empty(0, dtype=np.float64))
    cut = int(np.searchsorted(table.primes, x, side="right"))
    ps = table.primes[:cut]
    base_logs = np.log(ps.astype(np.float64))
    extra_m: list[int] = []
    extra_l: list[float] = []
    root_cut = int(np.searchsorted(ps, math.isqrt(x), side="right"))
    for i in range(root_cut):
        p = int(ps[i])
        lp = float(base_logs[i])
        m = p * p
        while m <= x:
            extra_m.append(m)
            extra_l.append(lp)
            m *= p
    ms = np.concatenate([ps, np.asarray(extra_m, dtype=np.int64)])
    logs = np.concatenate([base_logs, np.asarray(extra_l, dtype=np.float64)])
    return ms, logs


def log_factorial_via_lambda(table: SieveTable, n: int) -> float:
    """log(n!) as the prime-power sum of Lambda(m) * floor(n/m)."""
    table.check_range(n)
    ms, logs = prime_power_terms(table, n)
    floors = (n // ms).astype(np.float64)
    return fsum(logs * floors)


def verify_log_sum_identity(table: SieveTable, k: int,
                            rel_tol: float = 1e-12) -> VerificationOutcome:
    """Check log k against the sum of Lambda over the divisors of k.

    The divisor sum collapses to sum_p a_p log p over the factorization
    k = prod p^a_p; failure is reported, never raised.
    """
    table.check_range(k, lo=1)
    if k == 1:
        witness = Witness(input=1, lhs=0.0, rhs=rel_tol, margin=rel_tol)
        return VerificationOutcome("log-sum-identity", (1, 1), True, witness)
    factors = factorize(table, k).factors
    lhs = fsum(a * math.log(p) for p, a in factors)
    rel = abs(lhs - math.log(k)) / math.log(k)
    witness = Witness(input=k, lhs=rel, rhs=rel_tol, margin=rel_tol - rel)
    return VerificationOutcome("log-sum-identity", (k, k), rel <= rel_tol,
                               witness)


def chebyshev_psi(table: SieveTable, x: int) -> float:
    """Cumulative Lambda mass up to x (0 below 2)."""
    if not 0 <= x <= table.limit:
        raise DomainError(f"x={x} outside [0, {table.limit}]")
    _, logs = prime_power_terms(table, x)
    return fsum(logs)


def theta_log_primorial(table: SieveTable, k: int) -> float:
    """log of the primorial: sum of log p over primes p <= k."""
    if not 0 <= k <= table.limit:
        raise DomainError(f"k={k} outside [0, {table.limit}]")
    cut = int(np.searchsorted(table.primes, k, side="right"))
    return fsum(np.log(table.primes[:cut].astype(np.float64)))


def prime_count(table: SieveTable, x: int) -> int:
    """pi(x) by binary search in the prime list."""
    if not 0 <= x <= table.limit:
        raise DomainError(f"x={x} outside [0, {table.limit}]")
    return int(np.searchsorted(table.primes, x, side="right"))


def divisors(fact: Factorization) -> list[int]:
    """All divisors, ascending, by exponent products."""
    divs = [1]
    for p, e in fact.factors:
        pk = 1
        grown = []
        for _ in range(e + 1):
            grown.extend(d * pk for d in divs)
            pk *= p
        divs = grown
    return sorted(divs)


def generalized_lambda(table: SieveTable, n: int, k: int) -> float:
    """Divisor sum of mu(d) log^k(n/d); k = 1 reproduces von_mangoldt.

    Only squarefree d contribute, so the sum runs over subsets of the
    distinct primes of n with sign by subset parity.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    table.check_range(n, lo=1)
    if n == 1:
        return 0.0
    ps = [p for p, _ in factorize(table, n).factors]
    terms = []
    for r in range(len(ps) + 1):
        sign = -1.0 if r % 2 else 1.0
        for combo in itertools.combinations(ps, r):
            d = math.prod(combo)
            terms.append(sign * math.log(n // d) ** k)
    return fsum(terms)


def verify_selberg_identity(table: SieveTable, n: int,
                            abs_tol: float = 1e-9) -> VerificationOutcome:
    """Lambda(n)log n + (Lambda*Lambda)(n) against the mu log^2 divisor sum."""
    table.check_range(n, lo=1)
    fact = factorize(table, n) if n > 1 else Factorization(1, [])
    divs = divisors(fact)
    lam = {d: von_mangoldt(table, d).value for d in divs}
    log_n = math.log(n) if n > 1 else 0.0
    lhs = lam[n] * log_n + fsum(lam[d] * lam[n // d] for d in divs)
    rhs = generalized_lambda(table, n, 2) if n > 1 else 0.0
    diff = abs(lhs - rhs)
    witness = Witness(input=n, lhs=diff, rhs=abs_tol, margin=abs_tol - diff)
    return VerificationOutcome("selberg-identity", (n, n), diff <= abs_tol,
                               witness)


# ---------------------------------------------------------------------------
# batch builders for the sweep checks and the bounds suite


def lambda_values(table: SieveTable, x: int) -> np.ndarray:
    """Lambda(n) for n = 0..x as a float64 array."""
    if not 0 <= x <= table.limit:
        raise DomainError(f"x={x} outside [0, {table.limit}]")
    arr = np.zeros(x + 1, dtype=np.float64)
    ms, logs = prime_power_terms(table, x)
    arr[ms] = logs
    return arr


def psi_table(table: SieveTable, x: int) -> CumulativeTable:
    values = compensated_cumsum(lambda_values(table, x))
    return CumulativeTable(TableKind.PSI, x, values,
                           Arithmetic.COMPENSATED_FLOAT)


def theta_table(table: SieveTable, x: int) -> CumulativeTable:
    if not 0 <= x <= table.limit:
        raise DomainError(f"x={x} outside [0, {table.limit}]")
    arr = np.zeros(x + 1, dtype=np.float64)
    cut = int(np.searchsorted(table.primes, x, side="right"))
    ps = table.primes[:cut]
    arr[ps] = np.log(ps.astype(np.float64))
    return CumulativeTable(TableKind.THETA, x, compensated_cumsum(arr),
                           Arithmetic.COMPENSATED_FLOAT)


def pi_count_table(table: SieveTable, x: int) -> CumulativeTable:
    if not 0 <= x <= table.limit:
        raise DomainError(f"x={x} outside [0, {table.limit}]")
    arr = np.zeros(x + 1, dtype=np.int64)
    cut = int(np.searchsorted(table.primes, x, side="right"))
    arr[table.primes[:cut]] = 1
    return CumulativeTable(TableKind.PI_COUNT, x, np.cumsum(arr),
                           Arithmetic.EXACT_INTEGER)


def log_factorial_table(n: int) -> CumulativeTable:
    """log(k!) for k = 0..n, one compensated prefix pass."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    terms = np.zeros(n + 1, dtype=np.float64)
    if n >= 2:
        terms[2:] = np.log(np.arange(2, n + 1, dtype=np.float64))
    return CumulativeTable(TableKind.LOG_FACTORIAL, n,
                           compensated_cumsum(terms),
                           Arithmetic.COMPENSATED_FLOAT)


def divisor_lambda_sums(table: SieveTable, x: int) -> np.ndarray:
    """Sum of Lambda over the divisors of n, for every n = 0..x at once.

    Sieve-accumulated: each prime power m spreads log p onto its
    multiples, which reorganizes the floor(n/m) double count without
    ever invoking the log identity being tested.
    """
    if not 0 <= x <= table.limit:
        raise DomainError(f"x={x} outside [0, {table.limit}]")
    arr = np.zeros(x + 1, dtype=np.float64)
    ms, logs = prime_power_terms(table, x)
    for m, lp in zip(ms.tolist(), logs.tolist()):
        arr[m::m] += lp
    return arr


def log_sum_identity_sweep(table: SieveTable, k_max: int,
                           rel_tol: float = 1e-12) -> VerificationOutcome:
    """verify_log_sum_identity across every k <= k_max, vectorized."""
    sums = divisor_lambda_sums(table, k_max)
    ks = np.arange(2, k_max + 1, dtype=np.float64)
    rel = np.abs(sums[2:] - np.log(ks)) / np.log(ks)
    worst = int(np.argmax(rel))
    witness = Witness(input=worst + 2, lhs=float(rel[worst]), rhs=rel_tol,
                      margin=rel_tol - float(rel[worst]))
    return VerificationOutcome("log-sum-identity", (1, k_max),
                               bool(np.all(rel <= rel_tol)), witness)


def legendre_exact_sweep(table: SieveTable, n_max: int) -> VerificationOutcome:
    """Exact check: Legendre's valuation of each prime p in n! equals the
    exponent accumulated by factorizing 2..n, for every n <= n_max and
    every p <= n. Integer equality, zero tolerance."""
    if not 2 <= n_max <= table.limit:
        raise DomainError(f"n_max={n_max} outside [2, {table.limit}]")
    positions: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for k in range(2, n_max + 1):
        for p, e in factorize(table, k).factors:
            positions[p].append((k, e))
    ns = np.arange(n_max + 1, dtype=np.int64)
    worst: Witness | None = None
    ok = True
    for p in sorted(positions):
        nu = np.zeros(n_max + 1, dtype=np.int64)
        ks, es = zip(*positions[p])
        nu[list(ks)] = es
        oracle = np.cumsum(nu)
        legendre = np.zeros(n_max + 1, dtype=np.int64)
        pk = p
        while pk <= n_max:
            legendre += ns // pk
            pk *= p
        diff = np.abs(oracle - legendre)
        bad = int(np.argmax(diff))
        if diff[bad] > 0:
            ok = False
            worst = Witness(input=bad, lhs=float(oracle[bad]),
                            rhs=float(legendre[bad]),
                            margin=-float(diff[bad]))
            break
    if worst is None:
        worst = Witness(input=n_max, lhs=0.0, rhs=0.0, margin=0.0)
    return VerificationOutcome("legendre-exponent-exact", (2, n_max), ok,
                               worst)


def logfact_dual_route_sweep(table: SieveTable, n_max: int,
                             rel_tol: float = 1e-11) -> VerificationOutcome:
    """Direct log(n!) against the prime-power route for every n <= n_max."""
    if not 2 <= n_max <= table.limit:
        raise DomainError(f"n_max={n_max} outside [2, {table.limit}]")
    direct = log_factorial_table(n_max).values
    via = compensated_cumsum(divisor_lambda_sums(table, n_max))
    rel = np.abs(direct[2:] - via[2:]) / direct[2:]
    worst = int(np.argmax(rel))
    witness = Witness(input=worst + 2, lhs=float(rel[worst]), rhs=rel_tol,
                      margin=rel_tol - float(rel[worst]))
    return VerificationOutcome("log-factorial-dual-route", (2, n_max),
                               bool(np.all(rel <= rel_tol)), witness)


def selberg_sweep(table: SieveTable, n_max: int,
                  abs_tol: float = 1e-9) -> VerificationOutcome:
    """Selberg identity by brute-force divisor enumeration, n <= n_max."""
    if not 1 <= n_max <= table.limit:
        raise DomainError(f"n_max={n_max} outside [1, {table.limit}]")
    lam = lambda_values(table, n_max)
    logs = np.zeros(n_max + 1, dtype=np.float64)
    logs[1:] = np.log(np.arange(1, n_max + 1, dtype=np.float64))
    worst = Witness(input=1, lhs=0.0, rhs=abs_tol, margin=abs_tol)
    ok = True
    for n in range(2, n_max + 1):
        divs = divisors(factorize(table, n))
        lhs = float(lam[n]) * float(logs[n]) + math.fsum(
            float(lam[d] * lam[n // d]) for d in divs)
        rhs = generalized_lambda(table, n, 2)
        diff = abs(lhs - rhs)
        margin = abs_tol - diff
        if margin < worst.margin:
            worst = Witness(input=n, lhs=diff, rhs=abs_tol, margin=margin)
            if margin < 0:
                ok = False
    return VerificationOutcome("selberg-identity", (1, n_max), ok, worst)


def generalized_lambda_k1_sweep(table: SieveTable, n_max: int,
                                abs_tol: float = 1e-12) -> VerificationOutcome:
    """Lambda_1 must coincide with the point von Mangoldt values."""
    if not 1 <= n_max <= table.limit:
        raise DomainError(f"n_max={n_max} outside [1, {table.limit}]")
    worst = Witness(input=1, lhs=0.0, rhs=abs_tol, margin=abs_tol)
    ok = True
    for n in range(1, n_max + 1):
        diff = abs(generalized_lambda(table, n, 1)
                   - von_mangoldt(table, n).value)
        margin = abs_tol - diff
        if margin < worst.margin:
            worst = Witness(input=n, lhs=diff, rhs=abs_tol, margin=margin)
            if margin < 0:
                ok = False
    return VerificationOutcome("generalized-lambda-k1", (1, n_max), ok, worst)


def psi_theta_dominance_sweep(table: SieveTable, x_max: int,
                              tol: float = 1e-12) -> VerificationOutcome:
    """psi >= theta everywhere, equality exactly while no higher prime
    power has appeared (x < 4)."""
    if not 2 <= x_max <= table.limit:
        raise DomainError(f"x_max={x_max} outside [2, {table.limit}]")
    psi = psi_table(table, x_max).values
    theta = theta_table(table, x_max).values
    diff = psi - theta
    worst = int(np.argmin(diff[2:])) + 2
    ok = bool(np.all(diff[2:] >= -tol))
    if ok and x_max >= 4:
        # equality must break exactly at the first higher power, 4
        ok = bool(np.all(diff[2:4] <= tol)) and bool(
            np.all(diff[4:] > math.log(2) - 1e-9))
    witness = Witness(input=worst, lhs=float(theta[worst]),
                      rhs=float(psi[worst]), margin=float(diff[worst]))
    return VerificationOutcome("psi-theta-dominance", (2, x_max), ok, witness)
