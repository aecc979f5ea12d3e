"""
Verification suites for the exact finite-n identities.

Each suite evaluates one group of identities and returns a SuiteResult;
a failing identity is recorded, never raised. Suites:

- identities: partition identity, vanishing Dynkin traces of finite matrices
- conjugation: T_c against S T S^-1 in exact arithmetic
- variance: C_2 chain T_{f o c} / Toeplitz / closed form, higher cumulants,
  column localization of T_{f o c} - f(T_c), Laurent route agreement
- bch: nested-commutator traces of the split Toeplitz matrix
- right-limit: J against T_c for multiple Hermite, windowed differences
- recurrence: moment-built polynomials against the closed-form coefficients
- oracle: enumerated tiny Krawtchouk ensemble against trace and determinant
"""

import logging
import time
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from numpy.typing import NDArray

from .. import constants
from ..core.banded import HessenbergMatrix, SplitPair, split
from ..core.combinatorics import bch_words, partition_identity_sum
from ..core.cumulants import (
    CumulantReport,
    bch_commutator_trace,
    cumulant_difference_windowed,
    cumulant_with_scale,
    cumulants_from_mgf,
    cumulants_upto,
    dense_dynkin_trace,
    dynkin_cumulant,
    linear_statistic_cumulants,
    locality_radius,
    mgf_determinant,
    rows_for_mgf,
)
from ..core.families import make_family, nevai_limits, weighted_measures
from ..core.lattice_path import LatticePath, explicit_path, step_line
from ..core.oracle import (
    PolynomialCache,
    consistency_residual,
    enumerate_mope,
    ensemble_from_family,
    exact_cumulants,
    exp_trunc_scalar,
    expected_product_exp_trunc,
    multi_indices_up_to,
    one_point_expectation,
    path_expansion_residual,
    recurrence_residual,
)
from ..core.recurrence import (
    build_J,
    build_T_composed,
    build_Tc,
    conjugated_toeplitz,
    gap_ratios,
    polynomial_of_Tc,
    right_limit_sweep,
    toeplitz_matrix,
)
from ..core.symbol import (
    LaurentWindow,
    PolynomialLike,
    RationalSymbol,
    as_polynomial,
    compose_laurent,
    compose_laurent_series,
    finite_n_variance,
    limiting_variance,
)
from ..enums import SuiteName
from ..exceptions import MopeError
from ..io.loaders import FamilySpec, Tolerances
from .results import CheckMessage, SuiteResult, failure, finish, within

logger = logging.getLogger(__name__)

# Limit symbols swept by the variance and bch suites: (family, m, params)
SWEEP_FAMILIES: Tuple[Tuple[str, int, Dict[str, object]], ...] = (
    ("hermite", 1, {"a": (0.5,)}),
    ("hermite", 2, {"a": (1.0, -1.0)}),
    ("laguerre2", 1, {"sigma": (1.0,)}),
    ("laguerre2", 2, {"sigma": (1.0, 2.0)}),
    ("charlier", 1, {"lambda": 1.0, "tau": 1.0, "gamma": (1.0,)}),
    ("charlier", 2, {"lambda": 1.0, "tau": 1.0, "gamma": (0.5, 1.0)}),
    ("krawtchouk", 1, {"tau": 1.0, "p": (0.5,)}),
    ("krawtchouk", 2, {"tau": 1.0, "p": (0.25, 0.5)}),
)

# Unscaled discrete families for the recurrence suite: (family, m, n_scale, params)
RECURRENCE_FAMILIES: Tuple[Tuple[str, int, int, Dict[str, object]], ...] = (
    ("charlier", 2, 1, {"lambda": 1.0, "t": 2.0, "gamma": (0.5, 1.0), "scaled": False}),
    ("krawtchouk", 2, 2, {"t": 6.0, "p": (0.25, 0.5), "scaled": False}),
)
RECURRENCE_MAX_TOTAL = 4

ORACLE_LAMBDAS: Tuple[float, ...] = (-0.1, -0.05, 0.05, 0.1)
ORACLE_MEAN_ATOL: float = 1e-7

HIGHEST_ORDER = 4


def _monomial(d: int) -> NDArray[np.float64]:
    """Coefficients of x^d."""
    return np.eye(d + 1)[d]


def _relative_gap(a: float, b: float) -> float:
    denom = max(abs(a), abs(b))
    return abs(a - b) / denom if denom > 0 else 0.0


def _row_relative_gap(A: NDArray[np.float64], B: NDArray[np.float64]) -> float:
    """max over rows of max|A - B| / max(|A|, |B|) on that row."""
    gap = np.abs(A - B)
    scale = np.maximum(np.max(np.abs(A), axis=1), np.max(np.abs(B), axis=1))
    ratios = np.where(scale > 0, np.max(gap, axis=1) / np.where(scale > 0, scale, 1.0), 0.0)
    return float(np.max(ratios)) if ratios.size else 0.0


def sweep_symbols() -> List[Tuple[str, RationalSymbol]]:
    """Limit symbols of SWEEP_FAMILIES along the balanced direction."""
    out = []
    for family, m, params in SWEEP_FAMILIES:
        spec = make_family(family, m, **params)
        out.append((f"{family}/m={m}", nevai_limits(spec, np.full(m, 1.0 / m))))
    return out


# =============================================================================
# identities
# =============================================================================

def identities_suite(tol: Tolerances) -> SuiteResult:
    messages: List[CheckMessage] = []

    first = partition_identity_sum(1)
    messages.append(within(
        "PARTITION_IDENTITY_FIRST_ORDER", abs(float(first - 1)), 0.0,
        f"order 1 partition sum is {first} (expected 1)",
    ))
    for m in range(2, constants.VERIFY_PARTITION_MAX_ORDER + 1):
        value = partition_identity_sum(m)
        messages.append(within(
            "PARTITION_IDENTITY", abs(float(value)), 0.0,
            f"order {m} partition sum is {value} in exact arithmetic",
            suggestion="Check the composition enumeration and factorial weights",
        ))

    rng = np.random.default_rng(constants.VERIFY_SEED)
    A1 = rng.standard_normal((5, 5))
    A2 = rng.standard_normal((5, 5))
    for m in range(2, 6):
        value, scale = dense_dynkin_trace(A1, A2, m)
        ratio = abs(value) / scale if scale > 0 else 0.0
        messages.append(within(
            "DYNKIN_TRACE_FINITE", ratio, tol.bch_rtol,
            f"degree {m} Dynkin term of log(e^A1 e^A2), 5x5: |trace| / scale = {ratio:.3e}",
        ))
    return finish(SuiteName.IDENTITIES.value, messages)


# =============================================================================
# conjugation
# =============================================================================

def _dyadic_choice(rng: np.random.Generator, low: float, high: float, count: int,
                   distinct: bool) -> NDArray[np.float64]:
    """Multiples of 1/16 in [low, high]; cheap in exact arithmetic."""
    grid = np.arange(int(round(low * 16)), int(round(high * 16)) + 1) / 16.0
    return rng.choice(grid, size=count, replace=not distinct)


def conjugation_suite(tol: Tolerances) -> SuiteResult:
    messages: List[CheckMessage] = []
    rng = np.random.default_rng(constants.VERIFY_SEED)
    for case in range(constants.VERIFY_CONJUGATION_CASES):
        m = int(rng.integers(1, 4))
        size = int(rng.integers(4, constants.VERIFY_CONJUGATION_MAX_SIZE + 1))
        poles = _dyadic_choice(rng, -2.0, 2.0, m, distinct=True)
        residues = _dyadic_choice(rng, 1.0 / 16, 2.0, m, distinct=False)
        symbol = RationalSymbol(poles=poles, residues=residues)
        steps = rng.integers(1, m + 1, size=size + 1)
        path = explicit_path(m, steps.tolist())
        tag = f"case {case}: m={m}, size={size}, poles={poles.tolist()}"
        try:
            window = compose_laurent_series(
                (0.0, 1.0), symbol, L=size + 1, exact=True, certify_tail=False)
            conjugated = conjugated_toeplitz(window, symbol.poles, path, size, exact=True)
            Tc = build_Tc(symbol, path, size)
        except MopeError as e:
            messages.append(failure("CONJUGATION_FAILED", f"{tag}: {e}"))
            continue
        gap = _row_relative_gap(Tc.data, conjugated.data.astype(float))
        messages.append(within(
            "CONJUGATION", gap, tol.conjugation_rtol,
            f"{tag}: T_c vs S T S^-1 row-relative gap {gap:.3e}",
            suggestion="Compare build_Tc rows with the pi-basis expansion of tau_c",
        ))
    return finish(SuiteName.CONJUGATION.value, messages)


# =============================================================================
# variance
# =============================================================================

def laurent_agreement(quad: LaurentWindow, series: LaurentWindow, tol: Tolerances,
                      tag: str) -> CheckMessage:
    """
    Limiting variance from the quadrature window against the series window.

    The allowance adds the propagated quadrature noise of every r_l r_-l
    product to laurent_agreement_rtol relative to the series value.
    """
    v_quad = limiting_variance(quad)
    v_series = limiting_variance(series)
    d = quad.degree
    noise = sum(
        ell * (abs(float(quad.coefficient(ell))) * quad.error_bound(-ell)
               + abs(float(quad.coefficient(-ell))) * quad.error_bound(ell))
        for ell in range(1, d + 1)
    )
    allowed = tol.laurent_agreement_rtol * abs(v_series) + noise
    return within(
        "LAURENT_ROUTES_AGREE", abs(v_quad - v_series), allowed,
        f"{tag}: variance {v_quad:.15g} (quadrature) vs {v_series:.15g} (series)",
    )


def variance_suite(tol: Tolerances) -> SuiteResult:
    messages: List[CheckMessage] = []
    top_degree = max(constants.VERIFY_DEGREES)
    for label, symbol in sweep_symbols():
        length = max(constants.VERIFY_SIZES) + (HIGHEST_ORDER + 1) * top_degree + 2
        path = step_line(symbol.m, length)
        for d in constants.VERIFY_DEGREES:
            f = _monomial(d)
            try:
                quad = compose_laurent(
                    f, symbol, aliasing_rtol=tol.aliasing_rtol, certify_tail=False)
                series = compose_laurent_series(f, symbol, L=quad.lower, certify_tail=False)
                messages.append(laurent_agreement(quad, series, tol, f"{label}, x^{d}"))
            except MopeError as e:
                messages.append(failure("LAURENT_EXTRACTION_FAILED", f"{label}, x^{d}: {e}"))
            for n in constants.VERIFY_SIZES:
                tag = f"{label}, x^{d}, n={n}"
                try:
                    messages.extend(_variance_case(f, d, n, symbol, path, tol, tag))
                except MopeError as e:
                    messages.append(failure("VARIANCE_EVALUATION_FAILED", f"{tag}: {e}"))
    return finish(SuiteName.VARIANCE.value, messages)


def _variance_case(f: NDArray[np.float64], d: int, n: int, symbol: RationalSymbol,
                   path: LatticePath, tol: Tolerances, tag: str) -> List[CheckMessage]:
    messages: List[CheckMessage] = []
    rows = n + (HIGHEST_ORDER - 1) * d
    T = build_T_composed(f, symbol, path, rows)
    window = compose_laurent_series(f, symbol, L=rows, certify_tail=False)
    toeplitz = toeplitz_matrix(window, rows)

    c2_T, _ = cumulant_with_scale(T, n, 2)
    c2_toeplitz, _ = cumulant_with_scale(toeplitz, n, 2)
    closed = finite_n_variance(window, n)
    messages.append(within(
        "VARIANCE_T_VS_TOEPLITZ", _relative_gap(c2_T, c2_toeplitz), tol.variance_chain_rtol,
        f"{tag}: C_2(T_fc) = {c2_T:.15g}, C_2(Toeplitz) = {c2_toeplitz:.15g}",
    ))
    messages.append(within(
        "VARIANCE_CLOSED_FORM", _relative_gap(c2_toeplitz, closed), tol.variance_chain_rtol,
        f"{tag}: C_2(Toeplitz) = {c2_toeplitz:.15g}, sum min(l,n) r_l r_-l = {closed:.15g}",
    ))

    if n == constants.VERIFY_VANISHING_SIZE:
        values, scales = cumulants_upto(T, n, HIGHEST_ORDER)
        for m in range(3, HIGHEST_ORDER + 1):
            ratio = abs(values[m]) / scales[m] if scales[m] > 0 else 0.0
            messages.append(within(
                "HIGHER_CUMULANT_VANISHES", ratio, tol.vanishing_rtol,
                f"{tag}: |C_{m}(T_fc)| / scale = {ratio:.3e}",
            ))
    else:
        F = polynomial_of_Tc(symbol, path, f, rows)
        width = rows + d
        diff = _row_relative_gap(T.window(0, rows, d - 1, width), F.window(0, rows, d - 1, width))
        messages.append(within(
            "COMPOSED_MATCHES_POLYNOMIAL", diff, tol.vanishing_rtol,
            f"{tag}: T_fc vs f(T_c) beyond the first {d - 1} columns, gap {diff:.3e}",
        ))
    return messages


# =============================================================================
# bch
# =============================================================================

def bch_suite(tol: Tolerances) -> SuiteResult:
    messages: List[CheckMessage] = []
    n = constants.VERIFY_BCH_SIZE
    for label, symbol in sweep_symbols():
        for d in constants.VERIFY_DEGREES:
            f = _monomial(d)
            tag = f"{label}, x^{d}, n={n}"
            try:
                size = n + (HIGHEST_ORDER + 2) * d
                window = compose_laurent_series(f, symbol, L=size, certify_tail=False)
                toeplitz = toeplitz_matrix(window, size)
                pair = split(toeplitz)
                messages.extend(_bch_case(pair, toeplitz, window, n, tol, tag))
            except MopeError as e:
                messages.append(failure("BCH_EVALUATION_FAILED", f"{tag}: {e}"))
    return finish(SuiteName.BCH.value, messages)


def _bch_case(pair: SplitPair, toeplitz: HessenbergMatrix, window: LaurentWindow, n: int,
              tol: Tolerances, tag: str) -> List[CheckMessage]:
    messages: List[CheckMessage] = []
    variance = finite_n_variance(window, n)
    first = bch_commutator_trace(pair, n, (1, 1), tol.structural_zero_rtol)
    messages.append(within(
        "COMMUTATOR_TRACE_IS_MINUS_VARIANCE", _relative_gap(first.value, -variance),
        tol.variance_chain_rtol,
        f"{tag}: Tr P_n[B_-, B_+]P_n = {first.value:.15g}, -C_2 = {-variance:.15g}",
    ))
    c2, _ = cumulant_with_scale(toeplitz, n, 2)
    dynkin, _ = dynkin_cumulant(pair, n, 2)
    messages.append(within(
        "DYNKIN_SECOND_ORDER", _relative_gap(dynkin, c2), tol.variance_chain_rtol,
        f"{tag}: Dynkin C_2 = {dynkin:.15g}, trace C_2 = {c2:.15g}",
    ))
    for m in range(3, HIGHEST_ORDER + 1):
        for word in bch_words(m):
            trace = bch_commutator_trace(pair, n, word, tol.structural_zero_rtol)
            ratio = abs(trace.value) / trace.scale if trace.scale > 0 else 0.0
            messages.append(within(
                "BCH_TRACE_VANISHES", ratio, tol.bch_rtol,
                f"{tag}: word {word}, |trace| / scale = {ratio:.3e} "
                f"(commutator support {trace.support})",
            ))
    return messages


# =============================================================================
# right-limit
# =============================================================================

def right_limit_suite(tol: Tolerances) -> SuiteResult:
    messages: List[CheckMessage] = []
    spec = make_family("hermite", 2, a=(1.0, -1.0))
    nu = (0.5, 0.5)
    w = constants.VERIFY_RIGHT_LIMIT_WINDOW
    sizes = constants.VERIFY_RIGHT_LIMIT_SIZES
    path = step_line(2, max(sizes) + w + 2 * locality_radius(3, 1))
    try:
        sweep = right_limit_sweep(spec, path, nu, sizes, w)
    except MopeError as e:
        return finish(SuiteName.RIGHT_LIMIT.value, [failure("RIGHT_LIMIT_FAILED", str(e))])

    names = {1: "superdiagonal", 0: "diagonal", -1: "subdiagonal"}
    for n, gap, centre in sweep:
        for offset, name in names.items():
            messages.append(within(
                "RIGHT_LIMIT_EXACT_ENTRY", centre[offset], tol.right_limit_exact_atol,
                f"n={n}: {name} gap on row n is {centre[offset]:.3e}",
            ))
    for ((n0, g0, _), (n1, g1, _)), ratio in zip(zip(sweep, sweep[1:]), gap_ratios(sweep)):
        messages.append(within(
            "RIGHT_LIMIT_DECAY", 0.0 if ratio is None else ratio, tol.right_limit_max_ratio,
            f"gap({n1}) / gap({n0}) = {g1:.3e} / {g0:.3e}",
        ))

    # windowed difference against the full cumulants
    n = min(sizes)
    symbol = nevai_limits(spec, nu)
    rows = n + locality_radius(3, 1) + 1
    J = build_J(spec.with_n_scale(n), path, rows)
    Tc = build_Tc(symbol, path, rows)
    for m in (2, 3):
        c_J, s_J = cumulant_with_scale(J, n, m)
        c_T, s_T = cumulant_with_scale(Tc, n, m)
        windowed = cumulant_difference_windowed(J, Tc, n, m)
        error = abs((c_J - c_T) - windowed)
        messages.append(within(
            "WINDOWED_DIFFERENCE", error, tol.vanishing_rtol * max(s_J + s_T, 1.0),
            f"n={n}, m={m}: full {c_J - c_T:.15g} vs windowed {windowed:.15g}",
        ))
    return finish(SuiteName.RIGHT_LIMIT.value, messages)


# =============================================================================
# recurrence
# =============================================================================

def recurrence_suite(tol: Tolerances) -> SuiteResult:
    messages: List[CheckMessage] = []
    for family, m, n_scale, params in RECURRENCE_FAMILIES:
        spec = make_family(family, m, n_scale=n_scale, **params)
        measures = weighted_measures(spec)
        cache = PolynomialCache(measures)
        label = f"{family}/m={m}"
        for k in multi_indices_up_to(m, RECURRENCE_MAX_TOTAL):
            try:
                rec = recurrence_residual(spec, measures, k, cache)
                con = consistency_residual(spec, measures, k, cache)
            except MopeError as e:
                messages.append(failure("NON_NORMAL_INDEX", f"{label}, k={k}: {e}"))
                continue
            messages.append(within(
                "NEAREST_NEIGHBOR_RECURRENCE", rec, tol.recurrence_atol,
                f"{label}, k={k}: recurrence residual {rec:.3e}",
            ))
            messages.append(within(
                "CONSISTENCY_RELATION", con, tol.recurrence_atol,
                f"{label}, k={k}: consistency residual {con:.3e}",
            ))
        rows = RECURRENCE_MAX_TOTAL + 1
        path = step_line(m, rows + 1)
        try:
            J = build_J(spec, path, rows)
            residual = path_expansion_residual(
                J.window(0, rows, 0, rows + 1), path, measures, rows, cache)
        except MopeError as e:
            messages.append(failure("PATH_EXPANSION_FAILED", f"{label}: {e}"))
            continue
        messages.append(within(
            "PATH_EXPANSION", residual, tol.recurrence_atol,
            f"{label}: x p_(k_n) against row n of J, residual {residual:.3e}",
        ))
    return finish(SuiteName.RECURRENCE.value, messages)


# =============================================================================
# oracle
# =============================================================================

def oracle_family() -> FamilySpec:
    """Multiple Krawtchouk, m=2, p=(1/4, 1/2), t=2 with two particles."""
    return make_family("krawtchouk", 2, n_scale=2, t=2.0, p=(0.25, 0.5), scaled=False)


def oracle_checks(spec: FamilySpec, path: LatticePath, f: PolynomialLike, n: int, m_max: int,
                  tol: Tolerances, lambdas: Sequence[float] = ORACLE_LAMBDAS
                  ) -> Tuple[List[CheckMessage], CumulantReport, CumulantReport]:
    """
    Enumerated ensemble with multiplicities k_n against the matrix side.

    Compares C_1..C_{m_max} from enumeration with C_m^(n)(f(J)), the
    determinant det P_n exp_r(lambda f(J)) P_n with E[prod exp_r(lambda f(x_i))]
    at each lambda, and the mean from the lambda-derivative of the log
    determinant.

    Returns:
        (messages, enumeration report, trace report)

    Raises:
        ParameterDomainError: For a continuous family
        EnsembleTooLargeError, InvalidEnsembleError: From the enumeration
    """
    f = as_polynomial(f)
    tag = f"f={f.coef.tolist()}, n={n}"
    r = m_max + constants.MGF_ORDER_MARGIN
    ensemble = ensemble_from_family(spec, path.k(n))
    dist = enumerate_mope(ensemble)
    messages = [within(
        "ENSEMBLE_NONNEGATIVE", max(-dist.min_raw, 0.0), constants.NEGATIVE_PROBABILITY_ATOL,
        f"{tag}: smallest configuration probability {dist.min_raw:.3e}",
    )]
    route = "rational" if dist.exact else "floating point"
    messages.append(within(
        "ENSEMBLE_NORMALIZATION", dist.normalization_residual,
        constants.NEGATIVE_PROBABILITY_ATOL * len(dist.probabilities),
        f"{tag}: {route} enumeration, normalization residual {dist.normalization_residual:.1e}",
    ))
    exact = exact_cumulants(ensemble, f, m_max, dist)
    trace = linear_statistic_cumulants(spec, path, f, n, m_max, vary_with_n=False)
    for m in range(1, m_max + 1):
        messages.append(within(
            "ORACLE_CUMULANT", abs(exact.values[m] - trace.values[m]), tol.oracle_atol,
            f"{tag}: C_{m} enumeration {exact.values[m]:.15g}, trace {trace.values[m]:.15g}",
        ))
    J = build_J(spec, path, rows_for_mgf(f, n, r))
    for lam in lambdas:
        det = mgf_determinant(J, f, lam, n, r=r)
        expected = expected_product_exp_trunc(dist, f, lam, r)
        messages.append(within(
            "ORACLE_MGF", abs(det - expected), tol.oracle_atol,
            f"{tag}, lambda={lam}: determinant {det:.15g}, enumeration {expected:.15g}",
        ))
    mean = cumulants_from_mgf(J, f, n, m_max=1, r=r)[1]
    messages.append(within(
        "ORACLE_MEAN_ROUTES", abs(mean - exact.values[1]), ORACLE_MEAN_ATOL,
        f"{tag}: mean by lambda-derivative {mean:.12g}, enumeration {exact.values[1]:.12g}",
    ))
    return messages, exact, trace


def oracle_suite(tol: Tolerances) -> SuiteResult:
    messages: List[CheckMessage] = []
    spec = oracle_family()
    n = spec.n_scale
    m_max = 3
    r = m_max + constants.MGF_ORDER_MARGIN
    path = step_line(spec.m, 4 * (n + 2 * r))
    for coeffs in ((0.0, 1.0), (0.0, 0.0, 1.0)):
        try:
            found, _, _ = oracle_checks(spec, path, coeffs, n, m_max, tol)
            messages.extend(found)
        except MopeError as e:
            messages.append(failure("ORACLE_EVALUATION_FAILED", f"f={list(coeffs)}: {e}"))

    # one particle: determinant against a direct sum over the support
    single = ensemble_from_family(spec, (1, 0))
    f = as_polynomial((0.0, 1.0))
    J = build_J(spec, path, rows_for_mgf(f, 1, r))
    for lam in ORACLE_LAMBDAS:
        det = mgf_determinant(J, f, lam, 1, r=r)
        direct = one_point_expectation(single, lambda x, lam=lam: exp_trunc_scalar(lam * x, r))
        messages.append(within(
            "ORACLE_ONE_POINT", abs(det - direct), tol.oracle_atol,
            f"n=1, lambda={lam}: determinant {det:.15g}, direct sum {direct:.15g}",
        ))
    return finish(SuiteName.ORACLE.value, messages)


# =============================================================================
# Dispatch
# =============================================================================

SUITES: Dict[SuiteName, Callable[[Tolerances], SuiteResult]] = {
    SuiteName.IDENTITIES: identities_suite,
    SuiteName.CONJUGATION: conjugation_suite,
    SuiteName.VARIANCE: variance_suite,
    SuiteName.BCH: bch_suite,
    SuiteName.RIGHT_LIMIT: right_limit_suite,
    SuiteName.RECURRENCE: recurrence_suite,
    SuiteName.ORACLE: oracle_suite,
}


def run_suite(name: Union[str, SuiteName],
              tolerances: Optional[Tolerances] = None) -> List[SuiteResult]:
    """
    Run one suite, or every suite for "all".

    Raises:
        ValueError: For an unknown suite name
    """
    suite = SuiteName(name) if isinstance(name, str) else name
    tol = tolerances or Tolerances()
    selected: Sequence[SuiteName] = list(SUITES) if suite == SuiteName.ALL else [suite]
    results = []
    for key in selected:
        start = time.perf_counter()
        result = SUITES[key](tol)
        elapsed = time.perf_counter() - start
        level = logging.INFO if result.passed else logging.WARNING
        logger.log(level, f"Suite {key.value}: {len(result.errors)} failures in "
                          f"{len(result.messages)} checks ({elapsed:.2f}s)")
        results.append(result)
    return results
