"""Independent brute-force oracles the tests check the library against.

Everything here is trial division or direct enumeration: no sieve
tables, no shared code paths with the package.
"""

import math


def trial_factorize(n: int) -> list[tuple[int, int]]:
    factors = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            factors.append((d, e))
        d += 1
    if n > 1:
        factors.append((n, 1))
    return factors


def trial_primes(limit: int) -> list[int]:
    return [n for n in range(2, limit + 1)
            if all(n % d for d in range(2, math.isqrt(n) + 1))]


def trial_largest_factor(n: int) -> int:
    return trial_factorize(n)[-1][0]


def factorial_exponent(p: int, n: int) -> int:
    """Exponent of p in n! read off the exact big integer."""
    f = math.factorial(n)
    e = 0
    while f % p == 0:
        f //= p
        e += 1
    return e


def mobius_brute(n: int) -> int:
    factors = trial_factorize(n)
    if any(e >= 2 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1
