"""
Ground truth for small discrete ensembles.

Multiple orthogonal polynomials are built directly from the moments of the
measures w_j dmu, which checks the closed-form nearest-neighbor
coefficients of families.py. Tiny ensembles are enumerated exactly, so
cumulants and truncated exponential moments of a linear statistic can be
compared against the trace and determinant formulas.

Exact rational arithmetic (sympy) is used when every support has at most
EXACT_SUPPORT_LIMIT points; larger supports fall back to double precision
with a residual check.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy
from numpy.polynomial import Polynomial
from numpy.typing import ArrayLike, NDArray

from .. import constants
from ..enums import FamilyId
from ..exceptions import (
    EnsembleTooLargeError,
    InvalidEnsembleError,
    NonNormalIndexError,
    ParameterDomainError,
)
from ..io.loaders import FamilySpec, family_spec_to_dict
from .cumulants import CumulantReport, moments_to_cumulants
from .families import base_measure, krawtchouk_support_end, nn_coeffs, weight_eval
from .lattice_path import LatticePath
from .measures import DiscreteMeasure
from .symbol import PolynomialLike, as_polynomial

logger = logging.getLogger(__name__)

MultiIndex = Tuple[int, ...]
ExactValues = Tuple[Tuple[Fraction, ...], Tuple[Tuple[Fraction, ...], ...]]


# =============================================================================
# Moments and polynomials
# =============================================================================

def _to_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    return Fraction(float(value))


def _as_rational(value: float,
                 max_denominator: int = constants.RATIONAL_MAX_DENOMINATOR) -> Optional[Fraction]:
    """Simplest fraction that rounds back to value, or None."""
    guess = Fraction(float(value)).limit_denominator(max_denominator)
    return guess if float(guess) == float(value) else None


def _rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _from_rational(value: Any) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def discrete_moments(measure: DiscreteMeasure, order: int, exact: bool = False) -> List[Any]:
    """m(q) = sum_x x^q mass(x) for q = 0..order."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    if exact:
        xs = [_to_fraction(x) for x in measure.support]
        ws = [_to_fraction(w) for w in measure.masses]
        out = []
        powers = list(ws)
        for _ in range(order + 1):
            out.append(sum(powers, Fraction(0)))
            powers = [p * x for p, x in zip(powers, xs)]
        return out
    powers = np.vander(measure.support, order + 1, increasing=True)
    return list(powers.T @ measure.masses)


def use_exact(measures: Sequence[DiscreteMeasure],
              limit: int = constants.EXACT_SUPPORT_LIMIT) -> bool:
    return all(len(mu) <= limit for mu in measures)


def _moment_system(moments: Sequence[Sequence[Any]], k: MultiIndex
                   ) -> Tuple[List[List[Any]], List[Any]]:
    """Rows sum_i c_i m_j(i+l) = -m_j(N+l) for l < k_j."""
    N = sum(k)
    A: List[List[Any]] = []
    rhs: List[Any] = []
    for j, kj in enumerate(k):
        for l in range(kj):
            A.append([moments[j][i + l] for i in range(N)])
            rhs.append(-moments[j][N + l])
    return A, rhs


def _solve_exact(A: List[List[Fraction]], rhs: List[Fraction], k: MultiIndex) -> List[Fraction]:
    M = sympy.Matrix([[_rational(v) for v in row] for row in A])
    b = sympy.Matrix([_rational(v) for v in rhs])
    if M.det() == 0:
        raise NonNormalIndexError(k, "orthogonality system is singular")
    sol = M.LUsolve(b)
    return [_from_rational(v) for v in sol]


def _solve_float(A: List[List[float]], rhs: List[float], k: MultiIndex) -> List[float]:
    M = np.asarray(A, dtype=float)
    b = np.asarray(rhs, dtype=float)
    # column equilibration tames the spread of moment magnitudes
    col = np.max(np.abs(M), axis=0)
    if np.any(col == 0):
        raise NonNormalIndexError(k, "moment matrix has a zero column")
    Ms = M / col
    if np.linalg.cond(Ms) > 1.0 / (np.finfo(float).eps * 1e3):
        raise NonNormalIndexError(k, f"moment matrix is numerically singular "
                                     f"(cond {np.linalg.cond(Ms):.2e})")
    try:
        y = np.linalg.solve(Ms, b)
    except np.linalg.LinAlgError as e:
        raise NonNormalIndexError(k, str(e)) from e
    c = y / col
    residual = float(np.max(np.abs(M @ c - b)))
    scale = float(np.max(np.abs(M) @ np.abs(c) + np.abs(b)))
    if residual > constants.MOMENT_RESIDUAL_RTOL * scale:
        raise NonNormalIndexError(
            k, f"residual {residual:.3e} exceeds {constants.MOMENT_RESIDUAL_RTOL:.0e} x {scale:.3e}"
        )
    return list(c)


def mop_coefficients(measures: Sequence[DiscreteMeasure], k: Sequence[int],
                     exact: Optional[bool] = None) -> List[Any]:
    """
    Coefficients c_0..c_{|k|} (c_{|k|} = 1) of the type II polynomial p_k.

    Args:
        measures: w_1 dmu, ..., w_m dmu
        k: Multi-index
        exact: Force exact (True) or float (False); default by support size

    Raises:
        NonNormalIndexError: If the orthogonality system is singular
    """
    k = tuple(int(v) for v in k)
    if len(k) != len(measures):
        raise ParameterDomainError(f"multi-index {k} does not match {len(measures)} measures")
    if any(v < 0 for v in k):
        raise ParameterDomainError(f"multi-index entries must be >= 0, got {k}")
    exact = use_exact(measures) if exact is None else exact
    N = sum(k)
    one: Any = Fraction(1) if exact else 1.0
    if N == 0:
        return [one]
    if any(len(mu) < kj for mu, kj in zip(measures, k)):
        raise NonNormalIndexError(k, "more conditions than support points")
    moments = [discrete_moments(mu, N + max(k), exact=exact) for mu in measures]
    A, rhs = _moment_system(moments, k)
    coeffs = _solve_exact(A, rhs, k) if exact else _solve_float(A, rhs, k)
    return list(coeffs) + [one]


def mop_from_moments(measures: Sequence[DiscreteMeasure], k: Sequence[int],
                     exact: Optional[bool] = None) -> Polynomial:
    """
    Monic type II multiple orthogonal polynomial p_k from the moments.

    Example:
        >>> mu = DiscreteMeasure(np.array([-1.0, 1.0]), np.array([1.0, 1.0]))
        >>> mop_from_moments([mu], (1,)).coef
        array([0., 1.])
    """
    coeffs = mop_coefficients(measures, k, exact=exact)
    return Polynomial(np.array([float(c) for c in coeffs]))


class PolynomialCache:
    """Memoized p_k for one set of measures."""

    def __init__(self, measures: Sequence[DiscreteMeasure], exact: Optional[bool] = None):
        self.measures = tuple(measures)
        self.exact = use_exact(self.measures) if exact is None else exact
        self._store: Dict[MultiIndex, List[Any]] = {}

    def __call__(self, k: Sequence[int]) -> List[Any]:
        key = tuple(int(v) for v in k)
        if key not in self._store:
            self._store[key] = mop_coefficients(self.measures, key, exact=self.exact)
        return self._store[key]


def _as_float_array(coeffs: Sequence[Any], size: int) -> NDArray[np.float64]:
    out = np.zeros(size)
    out[: len(coeffs)] = [float(c) for c in coeffs]
    return out


def _shift_up(coeffs: Sequence[Any], size: int) -> NDArray[np.float64]:
    """Coefficients of x * p."""
    out = np.zeros(size)
    out[1: len(coeffs) + 1] = [float(c) for c in coeffs]
    return out


def recurrence_residual(spec: FamilySpec, measures: Sequence[DiscreteMeasure],
                        k: Sequence[int], cache: Optional[PolynomialCache] = None) -> float:
    """
    max_l of the coefficient-wise residual of

        x p_k - p_{k+e_l} - b_{k,l} p_k - sum_j a_{k,j} p_{k-e_j}

    divided by max(1, largest coefficient involved).
    """
    cache = cache or PolynomialCache(measures)
    k = tuple(int(v) for v in k)
    a, b = nn_coeffs(spec, np.asarray(k))
    size = sum(k) + 2
    p_k = cache(k)
    lower = {
        j: cache(tuple(v - (i == j) for i, v in enumerate(k)))
        for j in range(len(k)) if k[j] > 0
    }
    worst = 0.0
    for l in range(len(k)):
        p_up = cache(tuple(v + (i == l) for i, v in enumerate(k)))
        parts = [_shift_up(p_k, size), -_as_float_array(p_up, size),
                 -b[l] * _as_float_array(p_k, size)]
        parts += [-a[j] * _as_float_array(p, size) for j, p in lower.items()]
        residual = np.sum(parts, axis=0)
        scale = max(1.0, max(float(np.max(np.abs(q))) for q in parts))
        worst = max(worst, float(np.max(np.abs(residual))) / scale)
    return worst


def consistency_residual(spec: FamilySpec, measures: Sequence[DiscreteMeasure],
                         k: Sequence[int], cache: Optional[PolynomialCache] = None) -> float:
    """
    max over r != s of the residual of
    p_{k+e_r} - p_{k+e_s} - (b_{k,s} - b_{k,r}) p_k, scaled as in recurrence_residual.
    """
    cache = cache or PolynomialCache(measures)
    k = tuple(int(v) for v in k)
    _, b = nn_coeffs(spec, np.asarray(k))
    size = sum(k) + 2
    p_k = _as_float_array(cache(k), size)
    ups = [
        _as_float_array(cache(tuple(v + (i == l) for i, v in enumerate(k))), size)
        for l in range(len(k))
    ]
    worst = 0.0
    for r in range(len(k)):
        for s in range(len(k)):
            if r == s:
                continue
            parts = [ups[r], -ups[s], -(b[s] - b[r]) * p_k]
            residual = np.sum(parts, axis=0)
            scale = max(1.0, max(float(np.max(np.abs(q))) for q in parts))
            worst = max(worst, float(np.max(np.abs(residual))) / scale)
    return worst


def path_expansion_residual(J: NDArray[np.float64], path: LatticePath,
                            measures: Sequence[DiscreteMeasure],
                            rows: int, cache: Optional[PolynomialCache] = None) -> float:
    """
    max_n of the residual of x p_{k_n} - sum_i J[n, i] p_{k_i} for n < rows.

    J is a dense array holding at least rows x (rows + 1) entries of the
    recurrence matrix; residuals are scaled as in recurrence_residual.
    """
    cache = cache or PolynomialCache(measures)
    K = path.multi_indices
    size = rows + 2
    basis = [_as_float_array(cache(tuple(int(v) for v in K[i])), size) for i in range(rows + 1)]
    worst = 0.0
    for n in range(rows):
        parts = [_shift_up(cache(tuple(int(v) for v in K[n])), size)]
        parts += [-float(J[n, i]) * basis[i] for i in range(n + 2) if J[n, i] != 0]
        residual = np.sum(parts, axis=0)
        scale = max(1.0, max(float(np.max(np.abs(q))) for q in parts))
        worst = max(worst, float(np.max(np.abs(residual))) / scale)
    return worst


def multi_indices_up_to(m: int, total: int) -> List[MultiIndex]:
    """All k in Z_+^m with |k| <= total, by increasing |k|."""
    out: List[MultiIndex] = []
    for size in range(total + 1):
        for bars in combinations(range(size + m - 1), m - 1):
            prev = -1
            parts = []
            for bar in bars + (size + m - 1,):
                parts.append(bar - prev - 1)
                prev = bar
            out.append(tuple(parts))
    return out


# =============================================================================
# Exact enumeration
# =============================================================================

@dataclass(frozen=True)
class EnsembleSpec:
    """
    Discrete MOPE with multiplicities n_1..n_m.

    Attributes:
        support: Support points of the base measure
        base_masses: mu(x) on the support
        weight_values: w_j(x) on the support, shape (m, |support|)
        multiplicities: n_1..n_m
        description: Provenance for reports
        exact_masses: Rational mu(x), when the parameters are rational
        exact_weights: Rational w_j(x), shape (m, |support|)
    """
    support: NDArray[np.float64]
    base_masses: NDArray[np.float64]
    weight_values: NDArray[np.float64]
    multiplicities: Tuple[int, ...]
    description: Dict[str, Any] = field(default_factory=dict)
    exact_masses: Optional[Tuple[Fraction, ...]] = None
    exact_weights: Optional[Tuple[Tuple[Fraction, ...], ...]] = None

    def __post_init__(self) -> None:
        support = np.asarray(self.support, dtype=float)
        masses = np.asarray(self.base_masses, dtype=float)
        weights = np.atleast_2d(np.asarray(self.weight_values, dtype=float))
        if weights.shape != (len(self.multiplicities), support.size):
            raise ParameterDomainError(
                f"weight values must have shape ({len(self.multiplicities)}, {support.size}), "
                f"got {weights.shape}"
            )
        if any(v < 0 for v in self.multiplicities):
            raise ParameterDomainError(f"multiplicities must be >= 0, got {self.multiplicities}")
        if support.size < self.n:
            raise ParameterDomainError(
                f"support of size {support.size} cannot hold {self.n} particles"
            )
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "base_masses", masses)
        object.__setattr__(self, "weight_values", weights)

        if (self.exact_masses is None) != (self.exact_weights is None):
            raise ParameterDomainError("exact masses and exact weights must be given together")
        if self.exact_masses is not None and self.exact_weights is not None:
            exact_masses = tuple(_to_fraction(v) for v in self.exact_masses)
            exact_weights = tuple(tuple(_to_fraction(v) for v in row)
                                  for row in self.exact_weights)
            if (len(exact_masses) != support.size
                    or len(exact_weights) != self.m
                    or any(len(row) != support.size for row in exact_weights)):
                raise ParameterDomainError("exact values must match the support and weights")
            object.__setattr__(self, "exact_masses", exact_masses)
            object.__setattr__(self, "exact_weights", exact_weights)

    @property
    def exact(self) -> bool:
        """Rational values are known and the support is small enough for them."""
        return (self.exact_masses is not None
                and self.support.size <= constants.EXACT_SUPPORT_LIMIT)

    @property
    def n(self) -> int:
        return int(sum(self.multiplicities))

    @property
    def m(self) -> int:
        return len(self.multiplicities)

    def measures(self) -> Tuple[DiscreteMeasure, ...]:
        """w_j dmu for each j."""
        return tuple(
            DiscreteMeasure(self.support, self.base_masses * self.weight_values[j])
            for j in range(self.m)
        )

    def configuration_count(self) -> int:
        return math.comb(self.support.size, self.n)


def ensemble_from_family(spec: FamilySpec, multiplicities: Sequence[int]) -> EnsembleSpec:
    """
    Ensemble of a discrete family with the given multiplicities.

    Raises:
        ParameterDomainError: For continuous families
    """
    if spec.family not in (FamilyId.CHARLIER, FamilyId.KRAWTCHOUK):
        raise ParameterDomainError(f"{spec.family.value} has no finite discrete ensemble")
    mu = base_measure(spec)
    if not isinstance(mu, DiscreteMeasure):
        raise ParameterDomainError(f"{spec.family.value} has no discrete base measure")
    weights = np.vstack([weight_eval(spec, j, mu.support) for j in range(spec.m)])
    description = {
        "family": family_spec_to_dict(spec),
        "support_size": len(mu),
        "truncated": mu.truncated,
        "tail_bound": mu.tail_bound,
    }
    if mu.truncated:
        logger.info(f"Base measure truncated at x_max={int(mu.support[-1])}")
    exact = None
    if spec.family == FamilyId.KRAWTCHOUK and len(mu) <= constants.EXACT_SUPPORT_LIMIT:
        exact = _exact_krawtchouk_values(spec)
    return EnsembleSpec(
        support=mu.support,
        base_masses=mu.masses,
        weight_values=weights,
        multiplicities=tuple(int(v) for v in multiplicities),
        description=description,
        exact_masses=exact[0] if exact else None,
        exact_weights=exact[1] if exact else None,
    )


def _exact_krawtchouk_values(spec: FamilySpec) -> Optional[ExactValues]:
    """
    mu(x) = r^x / (x! (N - x)!) and w_j(x) = gamma_j^x as fractions.

    None when p_j or the base ratio r is not rational.
    """
    p = spec.params
    ratio = _as_rational(p.base_ratio)
    probs = [_as_rational(v) for v in p.p]
    if ratio is None or any(v is None for v in probs):
        logger.debug("Krawtchouk parameters are not rational, enumerating in floating point")
        return None
    end = krawtchouk_support_end(spec)
    masses = tuple(ratio ** x / (math.factorial(x) * math.factorial(end - x))
                   for x in range(end + 1))
    gammas = [v / (1 - v) / ratio for v in probs if v is not None]
    weights = tuple(tuple(g ** x for x in range(end + 1)) for g in gammas)
    return masses, weights


@dataclass(frozen=True)
class EnsembleDistribution:
    """
    Exact distribution over n-point configurations.

    Attributes:
        points: Configurations, shape (C, n), each row increasing
        probabilities: Normalized probabilities, shape (C,)
        min_raw: Smallest normalized probability before clipping
        exact_probabilities: Rational probabilities, when enumerated exactly
        normalization_residual: |sum p - 1| after clipping and before
            renormalizing; zero for the rational route
    """
    points: NDArray[np.float64]
    probabilities: NDArray[np.float64]
    min_raw: float = 0.0
    exact_probabilities: Optional[Tuple[Fraction, ...]] = None
    normalization_residual: float = 0.0

    @property
    def exact(self) -> bool:
        return self.exact_probabilities is not None

    @property
    def n(self) -> int:
        return int(self.points.shape[1])

    def linear_statistic(self, f: PolynomialLike) -> NDArray[np.float64]:
        """X(f) = sum_i f(x_i) for every configuration."""
        poly = as_polynomial(f)
        if self.points.shape[1] == 0:
            return np.zeros(self.points.shape[0])
        return poly(self.points).sum(axis=1)

    def expectation(self, values: ArrayLike) -> float:
        return float(np.dot(self.probabilities, np.asarray(values, dtype=float)))


def enumerate_mope(ensemble: EnsembleSpec,
                   limit: int = constants.ENUMERATION_LIMIT,
                   negative_atol: float = constants.NEGATIVE_PROBABILITY_ATOL
                   ) -> EnsembleDistribution:
    """
    Exact distribution det(x_i^(j-1)) det(g_j(x_i)) prod mu(x_i) / Z.

    g runs through w_1, x w_1, ..., x^(n_1-1) w_1, w_2, ..., x^(n_m-1) w_m.

    When the ensemble carries rational values (see EnsembleSpec.exact) both
    determinants and Z are computed in exact arithmetic. Otherwise double
    precision is used and the normalization residual is recorded.

    Raises:
        EnsembleTooLargeError: More than `limit` configurations
        InvalidEnsembleError: A probability below -negative_atol (below 0
            on the rational route)
    """
    count = ensemble.configuration_count()
    if count > limit:
        raise EnsembleTooLargeError(
            f"{count} configurations exceed the enumeration limit {limit}"
        )
    n = ensemble.n
    idx = np.array(list(combinations(range(ensemble.support.size), n)), dtype=np.int64)
    idx = idx.reshape(len(idx), n)
    X = ensemble.support[idx]
    if n == 0:
        return EnsembleDistribution(X, np.ones(1), exact_probabilities=(
            (Fraction(1),) if ensemble.exact else None))
    if ensemble.exact:
        return _enumerate_exact(ensemble, idx, X)

    powers = np.arange(n)
    V = X[:, :, None] ** powers[None, None, :]
    columns = []
    for j, nj in enumerate(ensemble.multiplicities):
        w = ensemble.weight_values[j][idx]
        for q in range(nj):
            columns.append(X ** q * w)
    G = np.stack(columns, axis=2)
    raw = np.linalg.det(V) * np.linalg.det(G) * np.prod(ensemble.base_masses[idx], axis=1)

    Z = float(raw.sum())
    if Z == 0.0:
        raise InvalidEnsembleError("normalization constant vanishes")
    probs = raw / Z
    min_raw = float(probs.min())
    if min_raw < -negative_atol:
        worst = X[int(np.argmin(probs))].tolist()
        raise InvalidEnsembleError(
            f"configuration {worst} has probability {min_raw:.3e} < -{negative_atol:.0e}"
        )
    probs = np.clip(probs, 0.0, None)
    residual = abs(float(probs.sum()) - 1.0)
    probs = probs / probs.sum()
    logger.debug(f"Enumerated {count} configurations of {n} points "
                 f"(min p = {min_raw:.3e}, residual {residual:.1e})")
    return EnsembleDistribution(X, probs, min_raw, normalization_residual=residual)


def _enumerate_exact(ensemble: EnsembleSpec, idx: NDArray[np.int64],
                     X: NDArray[np.float64]) -> EnsembleDistribution:
    masses, weights = ensemble.exact_masses, ensemble.exact_weights
    if masses is None or weights is None:
        raise InvalidEnsembleError("ensemble carries no rational values")
    n = ensemble.n
    support = [_to_fraction(v) for v in ensemble.support]
    raw: List[Fraction] = []
    for row in idx:
        xs = [support[i] for i in row]
        V = sympy.Matrix([[_rational(x ** q) for q in range(n)] for x in xs])
        G = sympy.Matrix([
            [_rational(xs[r] ** q * weights[j][i])
             for j, nj in enumerate(ensemble.multiplicities) for q in range(nj)]
            for r, i in enumerate(row)
        ])
        mass = math.prod((masses[i] for i in row), start=Fraction(1))
        raw.append(_from_rational(V.det(method="bareiss") * G.det(method="bareiss")) * mass)

    Z = sum(raw, Fraction(0))
    if Z == 0:
        raise InvalidEnsembleError("normalization constant vanishes")
    exact = tuple(v / Z for v in raw)
    worst = min(range(len(exact)), key=exact.__getitem__)
    if exact[worst] < 0:
        raise InvalidEnsembleError(
            f"configuration {X[worst].tolist()} has probability {exact[worst]} < 0"
        )
    logger.debug(f"Enumerated {len(exact)} configurations of {n} points in rational arithmetic")
    return EnsembleDistribution(
        X,
        np.array([float(v) for v in exact]),
        float(exact[worst]),
        exact_probabilities=exact,
    )


def exact_moments(dist: EnsembleDistribution, f: PolynomialLike, m_max: int) -> List[float]:
    """E[X^p] for p = 1..m_max."""
    X = dist.linear_statistic(f)
    return [dist.expectation(X ** p) for p in range(1, m_max + 1)]


def exact_cumulants(ensemble: EnsembleSpec, f: PolynomialLike, m_max: int,
                    dist: Optional[EnsembleDistribution] = None) -> CumulantReport:
    """Cumulants of X_n(f) from the enumerated distribution."""
    dist = dist or enumerate_mope(ensemble)
    moments = exact_moments(dist, f, m_max)
    cumulants = moments_to_cumulants(moments)
    return CumulantReport(
        n=ensemble.n,
        values={m + 1: float(c) for m, c in enumerate(cumulants)},
        matrix_id=None,
        f=tuple(float(c) for c in as_polynomial(f).coef),
        metadata={
            **ensemble.description,
            "multiplicities": list(ensemble.multiplicities),
            "moments": {str(p + 1): v for p, v in enumerate(moments)},
            "configurations": int(dist.points.shape[0]),
            "min_probability": dist.min_raw,
            "exact": dist.exact,
            "normalization_residual": dist.normalization_residual,
        },
    )


def exp_trunc_scalar(y: NDArray[np.float64], r: int) -> NDArray[np.float64]:
    """sum_{j<=r} y^j / j! elementwise."""
    total = np.zeros_like(y, dtype=float)
    term = np.ones_like(y, dtype=float)
    for j in range(r + 1):
        if j > 0:
            term = term * y / j
        total = total + term
    return total


def expected_product_exp_trunc(dist: EnsembleDistribution, f: PolynomialLike, lam: float,
                               r: int) -> float:
    """E[prod_i exp_r(lambda f(x_i))]; equals det P_n exp_r(lambda f(J)) P_n."""
    values = as_polynomial(f)(dist.points)
    return dist.expectation(np.prod(exp_trunc_scalar(lam * values, r), axis=1))


def expected_exp_trunc(dist: EnsembleDistribution, f: PolynomialLike, lam: float,
                       r: int) -> float:
    """E[exp_r(lambda X_n(f))]; agrees with the determinant through order lambda^r."""
    return dist.expectation(exp_trunc_scalar(lam * dist.linear_statistic(f), r))


def one_point_expectation(ensemble: EnsembleSpec, fn: Callable[[NDArray[np.float64]],
                                                               NDArray[np.float64]]) -> float:
    """sum_x fn(x) w_1(x) mu(x) / sum_x w_1(x) mu(x) for a single particle."""
    masses = ensemble.base_masses * ensemble.weight_values[0]
    return float(np.dot(fn(ensemble.support), masses) / masses.sum())
