"""Prime-sum asymptotics workbench.

Builds smallest-prime-factor sieves, evaluates the classical arithmetic
functions and prime partial sums over them, and verifies the attached
identities, asymptotic residual laws, and effective bounds at desk
scale -- exactly where exact arithmetic permits, with calibrated
tolerances where only asymptotics are claimed.
"""

from .arith import (
    CumulativeTable,
    LambdaValue,
    chebyshev_psi,
    generalized_lambda,
    legendre_valuation,
    log_factorial_direct,
    log_factorial_via_lambda,
    mobius,
    prime_count,
    theta_log_primorial,
    verify_log_sum_identity,
    verify_selberg_identity,
    von_mangoldt,
)
from .density import (
    LargeFactorCensus,
    census_oracle,
    density_series,
    split_point,
    g_count,
    g_count_split,
    has_large_prime_factor,
    large_factor_census,
    rough_tail_sum,
)
from .errors import DomainError, ResourceError
from .outcomes import VerificationOutcome, Witness
from .partial_sums import (
    EULER_GAMMA,
    MEISSEL_MERTENS_REFERENCE,
    ArithSeries,
    ConstantEstimate,
    ResidualReport,
    abel_summation,
    lambda_sum_residual_report,
    log_zeta_truncation,
    meissel_mertens_from_series,
    mertens1_residual_report,
    meissel_mertens_from_tail,
    mertens_first_sum,
    reciprocal_prime_sum,
    sum_lambda_over_n,
    mertens2_residual_report,
)
from .sieve import (
    Factorization,
    SieveTable,
    build_sieve,
    factorize,
    largest_prime_factor,
    nth_prime,
    read_prime_cache,
    write_prime_cache,
)

__version__ = "0.1.0"

__all__ = [
    "ArithSeries", "ConstantEstimate", "CumulativeTable", "DomainError",
    "EULER_GAMMA", "Factorization", "LambdaValue", "LargeFactorCensus",
    "MEISSEL_MERTENS_REFERENCE", "ResidualReport", "ResourceError",
    "SieveTable", "VerificationOutcome", "Witness", "abel_summation",
    "build_sieve", "census_oracle", "chebyshev_psi", "density_series",
    "factorize", "g_count", "g_count_split", "generalized_lambda",
    "has_large_prime_factor", "lambda_sum_residual_report",
    "large_factor_census", "largest_prime_factor",
    "legendre_valuation", "log_factorial_direct", "log_factorial_via_lambda",
    "log_zeta_truncation", "meissel_mertens_from_series",
    "meissel_mertens_from_tail", "mertens1_residual_report",
    "mertens_first_sum", "mobius", "nth_prime",
    "prime_count", "read_prime_cache", "reciprocal_prime_sum",
    "rough_tail_sum", "split_point", "sum_lambda_over_n",
    "mertens2_residual_report",
    "theta_log_primorial", "verify_log_sum_identity",
    "verify_selberg_identity", "von_mangoldt", "write_prime_cache",
]
