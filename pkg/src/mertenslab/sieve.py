"""Segmented smallest-prime-factor sieve and prime tables.

Every other module queries a SieveTable: the SPF array answers factor
structure in O(log n) per integer, the prime list answers counting and
enumeration. Construction is segmented so cache behaviour stays flat at
large limits; the finished table is immutable.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ResourceError

DEFAULT_SEGMENT = 1 << 18
MAX_LIMIT = 1 << 40
DEFAULT_MEMORY_BUDGET = 3 << 30

CACHE_MAGIC = int.from_bytes(b"MRTNSLB1", "little")
CACHE_VERSION = 1


@dataclass(frozen=True)
class SieveTable:
    """Immutable SPF table and prime list up to ``limit`` inclusive."""

    limit: int
    spf: np.ndarray      # spf[n] = smallest prime factor of n, 0 for n < 2
    primes: np.ndarray   # int64, ascending, all primes <= limit
    segment_size: int

    def __post_init__(self):
        self.spf.flags.writeable = False
        self.primes.flags.writeable = False

    def check_range(self, n: int, lo: int = 2) -> None:
        if not lo <= n <= self.limit:
            raise DomainError(f"n={n} outside [{lo}, {self.limit}]")


@dataclass(frozen=True)
class Factorization:
    """Prime factorization n = prod p^e, factors ascending in p."""

    n: int
    factors: list[tuple[int, int]]


def estimate_table_bytes(limit: int) -> int:
    """Rough upper bound on the memory a table at ``limit`` occupies."""
    spf_width = 4 if limit < 2**32 else 8
    prime_estimate = int(1.3 * limit / max(math.log(limit), 1.0)) + 16
    return spf_width * (limit + 1) + 8 * prime_estimate


def _base_primes(limit: int) -> np.ndarray:
    """Dense boolean sieve for the base primes up to sqrt of the limit."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p:: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def build_sieve(limit: int, segment_size: int = DEFAULT_SEGMENT,
                memory_budget: int = DEFAULT_MEMORY_BUDGET) -> SieveTable:
    """Build the SPF table and prime list for 2..limit.

    The result is bit-identical for any segment_size: segments cover
    disjoint ranges and base primes are applied smallest-first, so each
    slot is claimed exactly once by its smallest prime factor.
    """
    if limit < 2:
        raise DomainError(f"sieve limit must be >= 2, got {limit}")
    if segment_size < 2:
        raise DomainError(f"segment size must be >= 2, got {segment_size}")
    if limit > MAX_LIMIT:
        raise DomainError(f"limit {limit} exceeds the 2^40 indexing ceiling")
    required = estimate_table_bytes(limit)
    if required > memory_budget:
        raise ResourceError(
            f"sieve at limit {limit} needs ~{required} bytes "
            f"(budget {memory_budget})",
            required_bytes=required, budget_bytes=memory_budget)

    dtype = np.uint32 if limit < 2**32 else np.int64
    spf = np.zeros(limit + 1, dtype=dtype)
    base = _base_primes(math.isqrt(limit))
    base_list = [int(p) for p in base]
    prime_chunks: list[np.ndarray] = []

    for lo in range(2, limit + 1, segment_size):
        hi = min(lo + segment_size, limit + 1)
        view = spf[lo:hi]
        for p in base_list:
            if p * p >= hi:
                break
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start >= hi:
                continue
            if p == 2:
                view[start - lo:: 2] = 2    # nothing smaller can claim these
            else:
                sl = view[start - lo:: p]
                sl[sl == 0] = p
        fresh = np.flatnonzero(view == 0).astype(np.int64) + lo
        view[fresh - lo] = fresh
        prime_chunks.append(fresh)

    primes = (np.concatenate(prime_chunks) if prime_chunks
              else np.empty(0, dtype=np.int64))
    return SieveTable(limit=limit, spf=spf, primes=primes,
                      segment_size=segment_size)


def factorize(table: SieveTable, n: int) -> Factorization:
    """Exact factorization of n by repeated SPF division."""
    table.check_range(n)
    m = n
    factors: list[tuple[int, int]] = []
    spf = table.spf
    while m > 1:
        p = int(spf[m])
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        factors.append((p, e))
    return Factorization(n=n, factors=factors)


def nth_prime(table: SieveTable, n: int) -> int:
    """The n-th prime with p_1 = 2."""
    if not 1 <= n <= table.primes.size:
        raise DomainError(
            f"n={n} outside [1, {table.primes.size}] primes available")
    return int(table.primes[n - 1])


def largest_prime_factor(table: SieveTable, n: int) -> int:
    """Largest prime dividing n; SPF division yields factors ascending."""
    table.check_range(n)
    m = n
    p = 0
    spf = table.spf
    while m > 1:
        p = int(spf[m])
        while m % p == 0:
            m //= p
    return p


def largest_factor_range(table: SieveTable, lo: int, hi: int) -> np.ndarray:
    """Largest prime factor of every n in [lo, hi), vectorized.

    Peels one SPF layer per round over the still-composite entries; the
    last prime written per slot is the largest because SPF division
    produces factors in ascending order.
    """
    if lo < 2 or hi > table.limit + 1:
        raise DomainError(f"range [{lo}, {hi}) outside table limit")
    rem = np.arange(lo, hi, dtype=np.int64)
    out = np.zeros(hi - lo, dtype=np.int64)
    spf = table.spf
    active = np.flatnonzero(rem > 1)
    while active.size:
        p = spf[rem[active]].astype(np.int64)
        out[active] = p
        rem[active] //= p
        active = active[rem[active] > 1]
    return out


def write_prime_cache(path, table: SieveTable) -> None:
    """Binary prime-list cache: LE u64 header (magic, version, limit)."""
    header = np.array([CACHE_MAGIC, CACHE_VERSION, table.limit],
                      dtype="<u8")
    with open(path, "wb") as fh:
        header.tofile(fh)
        table.primes.astype("<i8").tofile(fh)


def read_prime_cache(path, expected_limit: int | None = None):
    """Load a prime cache, validating magic/version/limit before use.

    Returns (limit, primes). A wrong magic or version, a truncated
    payload, or a limit mismatch raises DomainError.
    """
    with open(path, "rb") as fh:
        header = np.fromfile(fh, dtype="<u8", count=3)
        if header.size != 3 or int(header[0]) != CACHE_MAGIC:
            raise DomainError(f"{path}: not a prime cache (bad magic)")
        if int(header[1]) != CACHE_VERSION:
            raise DomainError(f"{path}: unsupported cache version {header[1]}")
        limit = int(header[2])
        if expected_limit is not None and limit != expected_limit:
            raise DomainError(
                f"{path}: cache limit {limit} != requested {expected_limit}")
        primes = np.fromfile(fh, dtype="<i8")
    if primes.size and (primes[-1] > limit or primes[0] != 2):
        raise DomainError(f"{path}: cache payload inconsistent with header")
    return limit, primes.astype(np.int64)
