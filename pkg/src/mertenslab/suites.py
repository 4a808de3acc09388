"""Named verification suites and their deterministic runner.

Each suite is a fixed-order list of (name, callable) pairs producing
VerificationOutcome. Ranges scale with the configured limit but cap at
their desk-scale defaults. The runner may fan checks out to a
thread pool; outcomes are collected in list order, so output is
byte-identical for any thread count.
"""

import math
from concurrent.futures import ThreadPoolExecutor

from . import arith, bounds, density, partial_sums
from .errors import DomainError
from .outcomes import VerificationOutcome, Witness
from .sieve import SieveTable

SUITE_NAMES = ("identities", "bounds", "asymptotics", "density")

_TOLERANCE_DEFAULTS = {
    "log-sum-identity": 1e-12,
    "log-factorial-dual-route": 1e-11,
    "selberg-identity": 1e-9,
    "generalized-lambda-k1": 1e-12,
    "lambda-sum-bound": 2.0,
    "mertens1-bound": 2.0,
    "lambda-mertens-gap": 1.0,
    "mertens2-c": 1.0,
    "density-c": 3.0,
    "psi-linear-c1": 0.3,
    "psi-linear-c2": 1.2,
}


def resolve_tolerances(overrides: dict[str, float] | None) -> dict[str, float]:
    tols = dict(_TOLERANCE_DEFAULTS)
    for name, value in (overrides or {}).items():
        if name not in tols:
            known = ", ".join(sorted(tols))
            raise DomainError(f"unknown tolerance '{name}' (known: {known})")
        tols[name] = float(value)
    return tols


def _report_outcome(name: str, report) -> VerificationOutcome:
    worst = min(report.rows, key=lambda r: r.tolerance - abs(r.residual))
    witness = Witness(input=worst.x, lhs=abs(worst.residual),
                      rhs=worst.tolerance,
                      margin=worst.tolerance - abs(worst.residual))
    return VerificationOutcome(name, (report.rows[0].x, report.rows[-1].x),
                               report.passed, witness)


def _decades(lo_exp: int, hi_exp: int, limit: int) -> list[int]:
    return [10 ** k for k in range(lo_exp, hi_exp + 1) if 10 ** k <= limit]


def identity_checks(table: SieveTable, tols: dict[str, float]) -> list:
    L = table.limit
    return [
        ("log-sum-identity", lambda: arith.log_sum_identity_sweep(
            table, min(L, 10 ** 5), tols["log-sum-identity"])),
        ("legendre-exponent-exact", lambda: arith.legendre_exact_sweep(
            table, min(L, 10 ** 4))),
        ("log-factorial-dual-route", lambda: arith.logfact_dual_route_sweep(
            table, min(L, 10 ** 6), tols["log-factorial-dual-route"])),
        ("selberg-identity", lambda: arith.selberg_sweep(
            table, min(L, 10 ** 4), tols["selberg-identity"])),
        ("generalized-lambda-k1", lambda: arith.generalized_lambda_k1_sweep(
            table, min(L, 10 ** 4), tols["generalized-lambda-k1"])),
        ("psi-theta-dominance", lambda: arith.psi_theta_dominance_sweep(
            table, min(L, 10 ** 5))),
    ]


def bounds_checks(table: SieveTable, tols: dict[str, float]) -> list:
    L = table.limit
    checks = [
        ("binomial-bounds", lambda: bounds.check_binomial_bounds(
            min(L // 2, 10 ** 5))),
        ("psi-dyadic", lambda: bounds.check_psi_dyadic(
            table, min(L // 2, 10 ** 6))),
        ("psi-linear", lambda: bounds.check_psi_linear(
            table, min(L, 10 ** 7), tols["psi-linear-c1"],
            tols["psi-linear-c2"])),
        ("primorial-bound", lambda: bounds.check_primorial_bound(
            table, min(L, 10 ** 6))),
        ("interval-primorial", lambda: bounds.check_interval_primorial(
            table, min((L - 1) // 2, 10 ** 5))),
        ("stirling-lower", lambda: bounds.check_stirling_lower(
            min(L, 10 ** 6))),
        ("pi-upper", lambda: bounds.check_pi_upper(table, min(L, 10 ** 7))),
    ]
    n_primes = int(table.primes.size)
    if n_primes >= 6:
        checks.append(("dusart", lambda: bounds.check_dusart(
            table, min(n_primes, 10 ** 6))))
    checks.extend([
        ("reciprocal-lower", lambda: bounds.check_reciprocal_lower(
            table, min(L, 10 ** 6))),
        ("mertens1-bound", lambda: bounds.check_mertens_bound(
            table, min(L, 10 ** 7), tols["mertens1-bound"])),
    ])
    return checks


def _abel_exactness(table: SieveTable, xs: list[int],
                    rel_tol: float = 1e-12) -> VerificationOutcome:
    """Abel reconstruction of S(x) from log p/p weights, per sample x."""
    worst = Witness(input=xs[0], lhs=0.0, rhs=rel_tol, margin=math.inf)
    ok = True
    f = lambda t: 1.0 / math.log(t)
    fp = lambda t: -1.0 / (t * math.log(t) ** 2)
    for x in xs:
        cut = arith.prime_count(table, x)
        weights = [(int(p), math.log(p) / p)
                   for p in table.primes[:cut].tolist()]
        got = partial_sums.abel_summation(weights, f, fp, 2.0, float(x))
        ref = partial_sums.reciprocal_prime_sum(table, x)
        rel = abs(got - ref) / ref
        if rel_tol - rel < worst.margin:
            worst = Witness(input=x, lhs=rel, rhs=rel_tol,
                            margin=rel_tol - rel)
            ok = worst.margin >= 0
    return VerificationOutcome("abel-exactness", (xs[0], xs[-1]), ok, worst)


def _mm_route_agreement(table: SieveTable) -> VerificationOutcome:
    series = partial_sums.meissel_mertens_from_series(
        table, min(table.limit, 10 ** 7))
    tail = partial_sums.meissel_mertens_from_tail(table, table.limit)
    delta = abs(series.value - tail.value)
    combined = series.error_bound + tail.error_bound
    w = Witness(input=table.limit, lhs=delta, rhs=combined,
                margin=combined - delta)
    return VerificationOutcome("mm-route-agreement",
                               (min(table.limit, 10 ** 7), table.limit),
                               delta <= combined, w)


def _log_zeta_reference(table: SieveTable, s: float, reference: float,
                        pinned_tol: float) -> VerificationOutcome:
    n_max = min(table.limit, 10 ** 6)
    # the dropped tail is below 2 * n^(1-s), so widen at small tables
    tol = max(pinned_tol, 2.0 * n_max ** (1.0 - s))
    got = partial_sums.log_zeta_truncation(table, s, n_max)
    diff = abs(got - reference)
    w = Witness(input=n_max, lhs=diff, rhs=tol, margin=tol - diff)
    return VerificationOutcome(f"log-zeta-s{s:g}", (2, n_max), diff <= tol, w)


def asymptotics_checks(table: SieveTable, tols: dict[str, float]) -> list:
    L = table.limit
    checks = [
        ("lambda-sum-bound", lambda: partial_sums.lambda_sum_bound_sweep(
            table, min(L, 10 ** 7), tols["lambda-sum-bound"])),
        ("lambda-mertens-gap", lambda: partial_sums.lambda_mertens_gap_sweep(
            table, min(L, 10 ** 7), tols["lambda-mertens-gap"])),
    ]
    if L >= 10 ** 3:
        checks.append(("mertens2-residuals", lambda: _report_outcome(
            "mertens2-residuals", partial_sums.mertens2_residual_report(
                table, _decades(3, 7, L),
                partial_sums.MEISSEL_MERTENS_REFERENCE, tols["mertens2-c"]))))
        checks.append(("mm-route-agreement",
                       lambda: _mm_route_agreement(table)))
    if L >= 100:
        abel_xs = [x for x in (100, 10 ** 4, 10 ** 6) if x <= L]
        checks.append(("abel-exactness",
                       lambda: _abel_exactness(table, abel_xs)))
    checks.append(("log-zeta-s2", lambda: _log_zeta_reference(
        table, 2.0, math.log(partial_sums.PI_SQUARED_OVER_6), 1e-5)))
    if L >= 10 ** 4:
        checks.append(("log-zeta-s4", lambda: _log_zeta_reference(
            table, 4.0, math.log(partial_sums.PI_FOURTH_OVER_90), 1e-9)))
    return checks


def density_checks(table: SieveTable, tols: dict[str, float]) -> list:
    L = table.limit
    spots = tuple(x for x in (10 ** 6, 10 ** 7) if x <= L)
    checks = [
        ("pair-bijection", lambda: density.bijection_sweep(
            table, min(L, 10 ** 5), spots)),
        ("split-identity", lambda: density.split_identity_sweep(
            table, min(L, 10 ** 4))),
        ("split-interval", lambda: density.split_interval_sweep(
            table, min(L, 10 ** 6))),
    ]
    if L >= 10:
        checks.append(("small-part-bound",
                       lambda: density.small_part_bound_sweep(
                           table, min(L, 10 ** 7))))
    if L >= 10 ** 3:
        checks.append(("rough-tail-monotone",
                       lambda: density.rough_tail_monotone_sweep(
                           table, min(7, int(math.log10(L))))))
        checks.append(("density-envelope", lambda: _report_outcome(
            "density-envelope", density.density_series(
                table, _decades(3, 7, L), tols["density-c"]))))
    return checks


_SUITE_BUILDERS = {
    "identities": identity_checks,
    "bounds": bounds_checks,
    "asymptotics": asymptotics_checks,
    "density": density_checks,
}


def build_checks(table: SieveTable, selection: list[str],
                 tolerance_overrides: dict[str, float] | None = None) -> list:
    tols = resolve_tolerances(tolerance_overrides)
    names = list(SUITE_NAMES) if "all" in selection else selection
    for name in names:
        if name not in _SUITE_BUILDERS:
            raise DomainError(f"unknown suite '{name}' "
                              f"(known: {', '.join(SUITE_NAMES)}, all)")
    checks = []
    for name in names:
        checks.extend(_SUITE_BUILDERS[name](table, tols))
    return checks


def run_checks(checks, thread_count: int = 1) -> list[VerificationOutcome]:
    """Run every check, collecting outcomes in declaration order.

    Checks are independent; the pool only changes wall time, never the
    outcome sequence.
    """
    if thread_count < 1:
        raise DomainError(f"thread_count must be >= 1, got {thread_count}")
    if thread_count == 1 or len(checks) <= 1:
        return [fn() for _, fn in checks]
    with ThreadPoolExecutor(max_workers=thread_count) as pool:
        return list(pool.map(lambda item: item[1](), checks))
