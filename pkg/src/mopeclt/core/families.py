"""
Nearest-neighbor recurrence coefficients of the classical families.

For each family the type II multiple orthogonal polynomials satisfy

    x p_k(x) = p_{k+e_l}(x) + b_{k,l} p_k(x) + sum_j a_{k,j} p_{k-e_j}(x)

for every direction l. This module evaluates a_{k,j}, b_{k,j} in the
varying (n-dependent) scaling used for CLT studies, their Nevai limits
along a direction nu, and the weights and base measure defining each
family.

Families and their coefficients (n = n_scale):

    hermite     a = k_j/n,                     b_j = a_j (source value)
    laguerre2   a = k_j(|k|+alpha)/(n^2 s_j^2), b_j = (|k|+alpha+1)/(n s_j) + sum_r k_r/(n s_r)
    charlier    a = k_j lam t g_j,             b_j = lam t g_j + |k|            (unscaled)
                a = k_j lam tau g_j / n,       b_j = lam tau g_j + |k|/n        (scaled)
    krawtchouk  a = p_j(1-p_j) k_j (t+n-|k|),  b_j = (t+n-1-|k|) p_j + sum_l k_l (1-p_l)
                scaled: t = floor(n tau), a / n^2, b / n
"""

import logging
import math
from typing import Tuple, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import ValidationError
from scipy.special import gammaln

from .. import constants
from ..enums import FamilyId
from ..exceptions import ParameterDomainError
from ..io.loaders import FamilySpec
from .measures import (
    ContinuousDensity,
    DiscreteMeasure,
    check_lattice_point,
    half_line,
    lebesgue,
)
from .symbol import RationalSymbol, check_distinct_poles

logger = logging.getLogger(__name__)

BaseMeasure = Union[DiscreteMeasure, ContinuousDensity]


def make_family(family: Union[FamilyId, str], m: int, n_scale: int = 1,
                **params: object) -> FamilySpec:
    """
    Build a validated FamilySpec, raising ParameterDomainError on bad input.

    Example:
        >>> spec = make_family("hermite", 2, n_scale=10, a=(1.0, -1.0))
    """
    if "lambda_" in params:
        params["lambda"] = params.pop("lambda_")
    try:
        return FamilySpec.model_validate({
            "family": family.value if isinstance(family, FamilyId) else family,
            "m": m,
            "params": params,
            "n_scale": n_scale,
        })
    except ValidationError as e:
        raise ParameterDomainError(f"Invalid {family} parameters: {e}") from e


def effective_time(spec: FamilySpec) -> float:
    """Time t entering the coefficients: n*tau (Charlier), floor(n*tau) (Krawtchouk)."""
    p = spec.params
    if spec.family == FamilyId.CHARLIER:
        return spec.n_scale * p.tau if p.scaled else float(p.t)
    if spec.family == FamilyId.KRAWTCHOUK:
        return float(math.floor(spec.n_scale * p.tau)) if p.scaled else float(p.t)
    raise ParameterDomainError(f"{spec.family.value} has no time parameter")


def limit_time(spec: FamilySpec) -> float:
    """tau in the Nevai limit: tau when scaled, t/n otherwise."""
    p = spec.params
    return p.tau if p.scaled else float(p.t) / spec.n_scale


def laguerre_alpha(spec: FamilySpec) -> float:
    p = spec.params
    return p.alpha_hat * spec.n_scale if p.alpha_hat is not None else p.alpha


def _as_index_array(spec: FamilySpec, K: ArrayLike) -> NDArray[np.int64]:
    arr = np.asarray(K)
    if arr.ndim == 1:
        arr = arr[np.newaxis, :]
    if arr.ndim != 2 or arr.shape[1] != spec.m:
        raise ParameterDomainError(
            f"multi-indices must have {spec.m} entries, got shape {np.shape(K)}"
        )
    if np.any(arr < 0) or not np.all(np.equal(np.mod(arr, 1), 0)):
        raise ParameterDomainError(f"multi-index entries must be non-negative integers: {K}")
    return arr.astype(np.int64)


def nn_coeffs_batch(spec: FamilySpec, K: ArrayLike
                    ) -> Tuple[NDArray[np.float64], NDArray[np.float64]]:
    """
    Vectorized nn_coeffs for an array of multi-indices.

    Args:
        spec: Family specification
        K: Integer array of shape (N, m)

    Returns:
        (A, B) arrays of shape (N, m)
    """
    K = _as_index_array(spec, K)
    Kf = K.astype(float)
    total = Kf.sum(axis=1, keepdims=True)
    n = float(spec.n_scale)
    p = spec.params

    if spec.family == FamilyId.HERMITE:
        A = Kf / n
        B = np.broadcast_to(np.asarray(p.a, dtype=float), Kf.shape).copy()
    elif spec.family == FamilyId.LAGUERRE2:
        sigma = np.asarray(p.sigma, dtype=float)
        alpha = laguerre_alpha(spec)
        A = Kf * (total + alpha) / (n ** 2 * sigma ** 2)
        B = (total + alpha + 1.0) / (n * sigma) + (Kf / (n * sigma)).sum(axis=1, keepdims=True)
    elif spec.family == FamilyId.CHARLIER:
        gamma = np.asarray(p.gamma, dtype=float)
        if p.scaled:
            A = Kf * p.lam * p.tau * gamma / n
            B = p.lam * p.tau * gamma + total / n
        else:
            A = Kf * p.lam * p.t * gamma
            B = p.lam * p.t * gamma + total
    elif spec.family == FamilyId.KRAWTCHOUK:
        probs = np.asarray(p.p, dtype=float)
        t = effective_time(spec)
        # polynomials with |k| > t+n vanish on the support {0..t+n-1}
        room = np.maximum(t + n - total, 0.0)
        A = probs * (1.0 - probs) * Kf * room
        B = (t + n - 1.0 - total) * probs + (Kf * (1.0 - probs)).sum(axis=1, keepdims=True)
        if p.scaled:
            A = A / n ** 2
            B = B / n
    else:
        raise ParameterDomainError(f"unknown family {spec.family}")
    return A, B


def nn_coeffs(spec: FamilySpec, k: ArrayLike) -> Tuple[NDArray[np.float64], NDArray[np.float64]]:
    """
    Nearest-neighbor coefficients (a_{k,1..m}, b_{k,1..m}) of one multi-index.

    Example:
        >>> spec = make_family("hermite", 2, n_scale=10, a=(1.0, -1.0))
        >>> nn_coeffs(spec, (2, 1))
        (array([0.2, 0.1]), array([ 1., -1.]))
    """
    if np.ndim(k) != 1:
        raise ParameterDomainError(f"expected a single multi-index, got {k}")
    A, B = nn_coeffs_batch(spec, k)
    return A[0], B[0]


def nevai_limits(spec: FamilySpec, nu: ArrayLike) -> RationalSymbol:
    """
    Limiting symbol c(z) = z + sum_j a_j(nu)/(z - b_j(nu)).

    Obtained by substituting k_j/n -> nu_j, |k|/n -> 1 and t/n -> tau into
    the scaled coefficients.

    Raises:
        ParameterDomainError: If nu has negative entries or does not sum to 1
        ConfluenceError: If two limiting poles coincide
    """
    nu = np.asarray(nu, dtype=float)
    if nu.shape != (spec.m,):
        raise ParameterDomainError(f"nu must have {spec.m} entries, got {nu.shape}")
    if np.any(nu < 0) or not math.isclose(float(nu.sum()), 1.0, rel_tol=0, abs_tol=1e-12):
        raise ParameterDomainError(f"nu must be a probability vector, got {nu.tolist()}")
    p = spec.params

    if spec.family == FamilyId.HERMITE:
        residues = nu.copy()
        poles = np.asarray(p.a, dtype=float)
    elif spec.family == FamilyId.LAGUERRE2:
        sigma = np.asarray(p.sigma, dtype=float)
        # fixed alpha is o(n) and drops out of the limit
        alpha_hat = p.alpha_hat if p.alpha_hat is not None else 0.0
        residues = nu * (1.0 + alpha_hat) / sigma ** 2
        poles = (1.0 + alpha_hat) / sigma + float(np.sum(nu / sigma))
    elif spec.family == FamilyId.CHARLIER:
        rate = p.lam * limit_time(spec) * np.asarray(p.gamma, dtype=float)
        residues = nu * rate
        poles = rate + 1.0
    elif spec.family == FamilyId.KRAWTCHOUK:
        probs = np.asarray(p.p, dtype=float)
        tau = limit_time(spec)
        residues = probs * (1.0 - probs) * nu * tau
        poles = tau * probs + float(np.sum(nu * (1.0 - probs)))
    else:
        raise ParameterDomainError(f"unknown family {spec.family}")

    check_distinct_poles(poles)
    return RationalSymbol(poles=poles, residues=residues)


# =============================================================================
# Weights and base measures
# =============================================================================

def _check_weight_index(spec: FamilySpec, j: int) -> None:
    if not 0 <= j < spec.m:
        raise ParameterDomainError(f"weight index {j} out of range 0..{spec.m - 1}")


def krawtchouk_gamma(p: ArrayLike, base_ratio: float = 1.0) -> NDArray[np.float64]:
    """gamma_j with gamma_j * base_ratio = p_j / (1 - p_j)."""
    probs = np.asarray(p, dtype=float)
    if np.any((probs <= 0) | (probs >= 1)):
        raise ParameterDomainError(f"p must lie in (0, 1), got {probs.tolist()}")
    return probs / (1.0 - probs) / base_ratio


def krawtchouk_p_from_gamma(gamma: ArrayLike, base_ratio: float = 1.0) -> NDArray[np.float64]:
    """Inverse of krawtchouk_gamma."""
    g = np.asarray(gamma, dtype=float) * base_ratio
    if np.any(g <= 0):
        raise ParameterDomainError(f"gamma must be positive, got {np.asarray(gamma).tolist()}")
    return g / (1.0 + g)


def krawtchouk_support_end(spec: FamilySpec) -> int:
    """N = t + n - 1; the support is {0, ..., N}."""
    return int(effective_time(spec)) + spec.n_scale - 1


def weight_eval(spec: FamilySpec, j: int, x: ArrayLike) -> NDArray[np.float64]:
    """
    Weight w_j(x) for the 0-based weight index j.

    Raises:
        ParameterDomainError: If x lies outside the support of the base measure
    """
    _check_weight_index(spec, j)
    xs = np.asarray(x, dtype=float)
    p = spec.params
    n = float(spec.n_scale)

    if spec.family == FamilyId.HERMITE:
        return np.exp(-n * (0.5 * xs ** 2 - p.a[j] * xs))
    if spec.family == FamilyId.LAGUERRE2:
        if np.any(xs < 0):
            raise ParameterDomainError(f"laguerre2 weights live on [0, inf), got {x}")
        return xs ** laguerre_alpha(spec) * np.exp(-n * p.sigma[j] * xs)
    if spec.family == FamilyId.CHARLIER:
        for value in np.atleast_1d(xs):
            check_lattice_point(float(value))
        return p.gamma[j] ** xs
    if spec.family == FamilyId.KRAWTCHOUK:
        end = krawtchouk_support_end(spec)
        for value in np.atleast_1d(xs):
            check_lattice_point(float(value), end)
        gamma = krawtchouk_gamma(p.p, p.base_ratio)
        return gamma[j] ** xs
    raise ParameterDomainError(f"unknown family {spec.family}")


def _charlier_measure(rate: float) -> DiscreteMeasure:
    if rate == 0.0:
        return DiscreteMeasure(np.zeros(1), np.ones(1))
    log_rate = math.log(rate)
    logs = []
    x = 0
    while True:
        logs.append(x * log_rate - float(gammaln(x + 1)))
        if x + 1 > 2.0 * rate:
            # geometric tail: sum_{y > x} mass_y <= mass_x
            total = float(np.logaddexp.reduce(np.asarray(logs)))
            if logs[-1] - total < math.log(constants.CHARLIER_TAIL_RTOL):
                break
        x += 1
    masses = np.exp(np.asarray(logs))
    tail = float(masses[-1] / masses.sum())
    logger.debug(f"Charlier base measure truncated at x_max={x} (tail <= {tail:.1e})")
    return DiscreteMeasure(
        support=np.arange(x + 1, dtype=float),
        masses=masses,
        truncated=True,
        tail_bound=tail,
    )


def base_measure(spec: FamilySpec) -> BaseMeasure:
    """
    Base measure mu of the family.

    Discrete families return their masses on a finite support (Charlier
    truncated where the discarded tail is below 1e-16 of the kept mass).
    Continuous families return a pointwise density.
    """
    p = spec.params
    if spec.family == FamilyId.HERMITE:
        return lebesgue()
    if spec.family == FamilyId.LAGUERRE2:
        return half_line()
    if spec.family == FamilyId.CHARLIER:
        return _charlier_measure(p.lam * effective_time(spec))
    if spec.family == FamilyId.KRAWTCHOUK:
        end = krawtchouk_support_end(spec)
        x = np.arange(end + 1, dtype=float)
        logs = x * math.log(p.base_ratio) - gammaln(x + 1) - gammaln(end - x + 1)
        return DiscreteMeasure(support=x, masses=np.exp(logs))
    raise ParameterDomainError(f"unknown family {spec.family}")


def weighted_measures(spec: FamilySpec) -> Tuple[DiscreteMeasure, ...]:
    """The orthogonality measures w_j dmu of a discrete family."""
    mu = base_measure(spec)
    if not isinstance(mu, DiscreteMeasure):
        raise ParameterDomainError(f"{spec.family.value} has no discrete base measure")
    return tuple(
        mu.weighted(lambda x, j=j: weight_eval(spec, j, x)) for j in range(spec.m)
    )
