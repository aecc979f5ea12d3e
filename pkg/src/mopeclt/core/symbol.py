"""
Rational symbols and Laurent coefficients of composed symbols.

The limiting symbol is c(z) = z + sum_j a_j / (z - b_j). For a polynomial
test function f the composed symbol f o c has a Laurent expansion
sum_l r_l z^l valid for |z| > max|b_j|, with r_l = 0 for l > deg f. Two
independent routes compute the coefficients:

- compose_laurent: trapezoidal quadrature on the circle |z| = R, evaluated
  with one FFT. Coefficient r_l carries roundoff of order eps*max|F|*R^-l,
  recorded per coefficient in the window's noise bound.
- compose_laurent_series: polynomial arithmetic on truncated series in 1/z,
  in floating point or exactly over fractions.Fraction.

Example:
    >>> c = RationalSymbol(poles=[0.0], residues=[0.25])
    >>> f = as_polynomial([0.0, 0.0, 1.0])
    >>> limiting_variance(compose_laurent(f, c))  # 2 * a^2
    0.125
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterator, Optional, Sequence, Tuple, Union

import numpy as np
import sympy
from numpy.polynomial import Polynomial
from numpy.typing import ArrayLike, NDArray

from .. import constants
from ..enums import LaurentMethod
from ..exceptions import (
    ConfluenceError,
    ContourError,
    ParameterDomainError,
    UncertifiedWindowError,
    WindowTooNarrowError,
)

logger = logging.getLogger(__name__)

PolynomialLike = Union[Polynomial, Sequence[float], NDArray[np.float64]]


# =============================================================================
# Types
# =============================================================================

@dataclass(frozen=True)
class RationalSymbol:
    """
    Symbol c(z) = z + sum_j residues[j] / (z - poles[j]).

    Attributes:
        poles: Pairwise distinct real poles b_1..b_m
        residues: Real residues a_1..a_m
    """
    poles: NDArray[np.float64]
    residues: NDArray[np.float64]

    def __post_init__(self) -> None:
        poles = np.atleast_1d(np.asarray(self.poles, dtype=float))
        residues = np.atleast_1d(np.asarray(self.residues, dtype=float))
        if poles.shape != residues.shape or poles.ndim != 1:
            raise ParameterDomainError(
                f"poles and residues must be vectors of equal length, got {poles.shape} "
                f"and {residues.shape}"
            )
        check_distinct_poles(poles)
        object.__setattr__(self, "poles", poles)
        object.__setattr__(self, "residues", residues)

    @property
    def m(self) -> int:
        return int(self.poles.size)

    def __call__(self, z: ArrayLike) -> NDArray[np.complex128]:
        z = np.asarray(z, dtype=complex)
        total = z.copy()
        for a, b in zip(self.residues, self.poles):
            total = total + a / (z - b)
        return total

    def default_radius(self) -> float:
        """Circle radius 2*(1 + max|b_j| + sum|a_j|)."""
        return constants.LAURENT_RADIUS_FACTOR * (
            1.0 + float(np.max(np.abs(self.poles), initial=0.0))
            + float(np.sum(np.abs(self.residues)))
        )


def check_distinct_poles(poles: ArrayLike) -> None:
    """Raise ConfluenceError when two poles coincide within tolerance."""
    b = np.asarray(poles, dtype=float)
    for i in range(b.size):
        for j in range(i + 1, b.size):
            scale = max(1.0, abs(b[i]), abs(b[j]))
            if abs(b[i] - b[j]) <= constants.POLE_SEPARATION_RTOL * scale:
                raise ConfluenceError(
                    f"poles b_{i + 1} = {b[i]!r} and b_{j + 1} = {b[j]!r} coincide; "
                    "confluent symbols are not supported"
                )


def as_polynomial(f: PolynomialLike) -> Polynomial:
    """Coerce coefficients c_0..c_d (or a Polynomial) to a trimmed Polynomial."""
    if isinstance(f, Polynomial):
        poly = f
    else:
        coef = np.atleast_1d(np.asarray(f, dtype=float))
        if coef.size == 0:
            coef = np.zeros(1)
        poly = Polynomial(coef)
    return poly.trim()


def degree(f: PolynomialLike) -> int:
    """Degree of f; the zero polynomial has degree 0."""
    return int(as_polynomial(f).coef.size - 1)


@dataclass(frozen=True)
class LaurentWindow:
    """
    Laurent coefficients r_l of f o c for l in [-lower, upper].

    Attributes:
        values: r_{-lower}, ..., r_{upper} in increasing order of l
        lower: Depth L of the negative side
        upper: Largest stored l (at least deg f)
        method: Extraction route
        radius: Circle radius for quadrature windows (None for series)
        nodes: Quadrature node count (None for series)
        noise: Per-coefficient roundoff bound (zeros for series windows)
        aliasing_error: Max disagreement between N and 2N nodes
        tail_ratio: |r_{-L}| / max|r| from the series expansion
        tail_certified: True when the tail ratio met the tolerance
    """
    values: NDArray[Any]
    lower: int
    upper: int
    method: LaurentMethod
    radius: Optional[float] = None
    nodes: Optional[int] = None
    noise: Optional[NDArray[np.float64]] = None
    aliasing_error: float = 0.0
    tail_ratio: float = 0.0
    tail_certified: bool = True
    degree: int = field(default=0)

    def __post_init__(self) -> None:
        if len(self.values) != self.lower + self.upper + 1:
            raise ValueError(
                f"window of depth {self.lower} and upper {self.upper} needs "
                f"{self.lower + self.upper + 1} values, got {len(self.values)}"
            )

    def coefficient(self, ell: int) -> Any:
        """r_ell; zero above the stored upper end, error below the window."""
        if ell > self.upper:
            return self.values.dtype.type(0) if self.values.dtype != object else Fraction(0)
        if ell < -self.lower:
            raise WindowTooNarrowError(
                f"coefficient r_{ell} requested but window only reaches r_{-self.lower}"
            )
        return self.values[ell + self.lower]

    def error_bound(self, ell: int) -> float:
        """Roundoff bound of r_ell."""
        if self.noise is None or ell > self.upper or ell < -self.lower:
            return 0.0
        return float(self.noise[ell + self.lower])

    def items(self) -> Iterator[Tuple[int, Any]]:
        for offset, value in enumerate(self.values):
            yield offset - self.lower, value

    def max_abs(self) -> float:
        return float(max(abs(float(v)) for v in self.values))

    def as_float(self) -> "LaurentWindow":
        """Float copy of an exact window."""
        if self.values.dtype != object:
            return self
        return LaurentWindow(
            values=np.array([float(v) for v in self.values]),
            lower=self.lower,
            upper=self.upper,
            method=self.method,
            radius=self.radius,
            nodes=self.nodes,
            noise=self.noise,
            aliasing_error=self.aliasing_error,
            tail_ratio=self.tail_ratio,
            tail_certified=self.tail_certified,
            degree=self.degree,
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "method": self.method.value,
            "radius": self.radius,
            "nodes": self.nodes,
            "aliasing_error": self.aliasing_error,
            "tail_ratio": self.tail_ratio,
            "tail_certified": self.tail_certified,
            "coefficients": {str(ell): float(v) for ell, v in self.items()},
        }


def default_depth(f: PolynomialLike) -> int:
    """Default window depth 8*deg f + 40."""
    return constants.LAURENT_DEPTH_PER_DEGREE * degree(f) + constants.LAURENT_DEPTH_OFFSET


# =============================================================================
# Truncated series arithmetic
# =============================================================================

def _convolve(x: NDArray[Any], y: NDArray[Any]) -> NDArray[Any]:
    if x.dtype != object and y.dtype != object:
        return np.convolve(x, y)
    out = np.array([Fraction(0)] * (len(x) + len(y) - 1), dtype=object)
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for j, yj in enumerate(y):
            out[i + j] += xi * yj
    return out


def _series_multiply(x: NDArray[Any], x_low: int, y: NDArray[Any], y_low: int,
                     high: int) -> Tuple[NDArray[Any], int]:
    """Product of two series sum x_i t^(x_low+i), truncated above t^high."""
    prod = _convolve(x, y)
    low = x_low + y_low
    keep = max(0, high - low + 1)
    return prod[:keep], low


def _series_add_constant(x: NDArray[Any], low: int, value: Any) -> Tuple[NDArray[Any], int]:
    if low > 0:
        pad = np.array([value] + [x.dtype.type(0) if x.dtype != object else Fraction(0)]
                       * (low - 1), dtype=x.dtype)
        return np.concatenate([pad, x]), 0
    out = x.copy()
    if -low < len(out):
        out[-low] = out[-low] + value
    else:
        zero = Fraction(0) if x.dtype == object else 0.0
        out = np.concatenate([out, np.array([zero] * (-low - len(out)) + [value],
                                            dtype=x.dtype)])
    return out, low


def _horner_series(f_coef: Sequence[Any], c: NDArray[Any], c_low: int,
                   high: int, exact: bool) -> Tuple[NDArray[Any], int]:
    """f(c) as a truncated series, c given with lowest exponent c_low."""
    dtype = object if exact else float
    acc = np.array([f_coef[-1]], dtype=dtype)
    low = 0
    for coef in reversed(f_coef[:-1]):
        acc, low = _series_multiply(acc, low, c, c_low, high)
        acc, low = _series_add_constant(acc, low, coef)
    return acc, low


def _coerce(values: ArrayLike, exact: bool) -> NDArray[Any]:
    arr = np.atleast_1d(np.asarray(values, dtype=object if exact else float))
    if exact:
        return np.array([v if isinstance(v, Fraction) else Fraction(float(v))
                         if not isinstance(v, int) else Fraction(v) for v in arr],
                        dtype=object)
    return arr


def _power_sums(residues: NDArray[Any], poles: NDArray[Any], count: int,
                exact: bool) -> NDArray[Any]:
    """s_p = sum_j a_j b_j^(p-1) for p = 1..count."""
    dtype = object if exact else float
    out = np.array([Fraction(0) if exact else 0.0] * count, dtype=dtype)
    for a, b in zip(residues, poles):
        term = a
        for p in range(count):
            out[p] += term
            term = term * b
    return out


def laurent_series_coefficients(f: Union[PolynomialLike, Sequence[Fraction]],
                                residues: ArrayLike, poles: ArrayLike, depth: int,
                                exact: bool = False) -> NDArray[Any]:
    """
    Laurent coefficients r_{-depth}..r_{deg f} of f o c by series arithmetic in 1/z.

    With u = 1/z, c = u^-1 + sum_{p>=1} s_p u^p where s_p = sum_j a_j b_j^(p-1).

    Args:
        f: Coefficients c_0..c_d (Fractions allowed when exact)
        residues: a_j
        poles: b_j
        depth: L >= 0
        exact: Use fractions.Fraction arithmetic

    Returns:
        Array indexed by l + depth
    """
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    if exact:
        f_coef = list(_coerce(list(f) if not isinstance(f, Polynomial) else f.coef, True))
        while len(f_coef) > 1 and f_coef[-1] == 0:
            f_coef.pop()
    else:
        f_coef = list(as_polynomial(f).coef)
    d = len(f_coef) - 1
    a = _coerce(residues, exact)
    b = _coerce(poles, exact)
    high = depth + max(d - 1, 0)
    # c in powers of u, from u^-1 to u^high
    c = np.concatenate([
        np.array([Fraction(1) if exact else 1.0, Fraction(0) if exact else 0.0],
                 dtype=object if exact else float),
        _power_sums(a, b, max(high, 0), exact),
    ])[: high + 2]
    series, low = _horner_series(f_coef, c, -1, high, exact)
    zero = Fraction(0) if exact else 0.0
    out = np.array([zero] * (depth + d + 1), dtype=object if exact else float)
    # exponent e of u is r_{-e}
    for idx, value in enumerate(series):
        e = low + idx
        if -d <= e <= depth:
            out[depth - e] = value
    return out


def _tail_status(values: NDArray[Any], depth: int, degree_f: int) -> Tuple[float, bool]:
    """Tail ratio |r_{-L}|/max|r| and whether the negative side decays."""
    mags = np.array([abs(float(v)) for v in values])
    peak = float(mags.max()) if mags.size else 0.0
    if peak == 0.0:
        return 0.0, True
    ratio = mags[0] / peak
    if depth < 4:
        return float(ratio), True
    quarter = max(1, depth // 4)
    deep = float(mags[:quarter].max())
    shallow = float(mags[quarter: 2 * quarter].max())
    decaying = deep <= constants.TAIL_DECAY_RATIO * shallow or deep == 0.0
    return float(ratio), bool(decaying)


def compose_laurent_series(f: PolynomialLike, c: RationalSymbol, L: Optional[int] = None,
                           exact: bool = False, certify_tail: bool = True,
                           tail_rtol: float = constants.TAIL_RTOL,
                           require_tail: bool = False) -> LaurentWindow:
    """
    Laurent window of f o c from truncated power series in 1/z.

    When certify_tail is set and the coefficients decay, the window is
    doubled until |r_{-L}| <= tail_rtol * max|r|. Non-decaying tails (some
    |b_j| >= 1) cannot be certified by any finite window; the window is then
    returned with tail_certified False, unless require_tail is set.

    Raises:
        UncertifiedWindowError: Decaying tail still too large at the depth
            limit, or any uncertified tail when require_tail is set
    """
    certify_tail = certify_tail or require_tail
    f = as_polynomial(f)
    d = degree(f)
    depth = default_depth(f) if L is None else int(L)
    f_in: Any = [Fraction(float(v)) for v in f.coef] if exact else f
    while True:
        values = laurent_series_coefficients(f_in, c.residues, c.poles, depth, exact=exact)
        ratio, decaying = _tail_status(values, depth, d)
        certified = ratio <= tail_rtol
        if certified or not certify_tail or not decaying:
            break
        if depth >= constants.LAURENT_MAX_DEPTH:
            raise UncertifiedWindowError(
                f"tail ratio {ratio:.3e} above {tail_rtol:.1e} at depth {depth}"
            )
        depth = min(2 * depth, constants.LAURENT_MAX_DEPTH)
        logger.debug(f"Widening series window to depth {depth}")
    if certify_tail and not certified:
        if require_tail:
            raise UncertifiedWindowError(
                f"Laurent tail does not decay (ratio {ratio:.3e} at depth {depth}); "
                f"r_l for l < -{d} cannot be certified"
            )
        logger.warning(
            f"Laurent tail does not decay (ratio {ratio:.3e} at depth {depth}); "
            "window is exact but not tail-certified"
        )
    return LaurentWindow(
        values=values,
        lower=depth,
        upper=d,
        method=LaurentMethod.SERIES,
        noise=np.zeros(len(values)),
        tail_ratio=ratio,
        tail_certified=certified,
        degree=d,
    )


# =============================================================================
# Quadrature
# =============================================================================

def _next_power_of_two(n: int) -> int:
    return 1 << max(4, int(math.ceil(math.log2(max(n, 2)))))


def _trapezoid(f: Polynomial, c: RationalSymbol, radius: float, nodes: int, lower: int,
               upper: int) -> Tuple[NDArray[np.float64], NDArray[np.float64], float]:
    """Coefficients, per-coefficient noise bounds and max|imag| from one FFT."""
    k = np.arange(nodes)
    z = radius * np.exp(2j * np.pi * k / nodes)
    F = f(c(z))
    X = np.fft.fft(F) / nodes
    ells = np.arange(-lower, upper + 1)
    raw = X[np.mod(ells, nodes)] * radius ** (-ells.astype(float))
    eps = np.finfo(float).eps
    noise = (constants.QUADRATURE_NOISE_FACTOR * eps * math.log2(nodes)
             * float(np.max(np.abs(F))) * radius ** (-ells.astype(float)))
    return raw.real.copy(), noise, float(np.max(np.abs(raw.imag)))


def compose_laurent(f: PolynomialLike, c: RationalSymbol, L: Optional[int] = None,
                    radius: Optional[float] = None, upper: Optional[int] = None,
                    aliasing_rtol: float = constants.ALIASING_RTOL,
                    tail_rtol: float = constants.TAIL_RTOL,
                    certify_tail: bool = True,
                    require_tail: bool = False) -> LaurentWindow:
    """
    Laurent window of f o c by trapezoidal quadrature on |z| = R.

    Args:
        f: Polynomial test function
        c: Limiting symbol
        L: Window depth; default 8*deg f + 40
        radius: Circle radius; default 2*(1 + max|b_j| + sum|a_j|)
        upper: Largest l extracted; default deg f
        aliasing_rtol: Doubling-N agreement, relative to max|r_l| for |l| <= deg f
        tail_rtol: Tail certification threshold, evaluated on the series
        certify_tail: Widen the window until the tail meets tail_rtol
        require_tail: Raise rather than warn when the tail is not certified

    Returns:
        LaurentWindow with per-coefficient noise bounds

    Raises:
        ContourError: If the circle does not enclose every pole
        UncertifiedWindowError: If aliasing cannot be certified or a decaying
            tail stays above tail_rtol at the depth limit, or the tail is
            not certified and require_tail is set
    """
    certify_tail = certify_tail or require_tail
    f = as_polynomial(f)
    d = degree(f)
    depth = default_depth(f) if L is None else int(L)
    top = d if upper is None else max(int(upper), d)
    R = c.default_radius() if radius is None else float(radius)
    max_pole = float(np.max(np.abs(c.poles), initial=0.0))
    if R <= max_pole * (1.0 + 1e-12) or R <= 0:
        raise ContourError(f"radius {R} does not enclose the poles (max |b_j| = {max_pole})")

    # Tail certification on the exact-in-structure series expansion
    while True:
        series = laurent_series_coefficients(f, c.residues, c.poles, depth)
        ratio, decaying = _tail_status(series, depth, d)
        if ratio <= tail_rtol or not decaying or not certify_tail:
            break
        if depth >= constants.LAURENT_MAX_DEPTH:
            raise UncertifiedWindowError(
                f"tail ratio {ratio:.3e} above {tail_rtol:.1e} at depth {depth}"
            )
        depth = min(2 * depth, constants.LAURENT_MAX_DEPTH)
        logger.debug(f"Widening quadrature window to depth {depth}")
    tail_certified = ratio <= tail_rtol
    if certify_tail and not tail_certified:
        if require_tail:
            raise UncertifiedWindowError(
                f"Laurent tail of f o c does not decay (max|b_j| = {max_pole}); "
                f"r_l for l < -{d} cannot be certified"
            )
        logger.warning(
            f"Laurent tail of f o c does not decay (max|b_j| = {max_pole}); "
            f"window of depth {depth} is not tail-certified"
        )

    nodes = _next_power_of_two(constants.QUADRATURE_NODES_FACTOR * (d + depth + top + 1))
    core = slice(depth - d, depth + d + 1)
    while True:
        coarse, noise_coarse, _ = _trapezoid(f, c, R, nodes, depth, top)
        fine, noise_fine, imag = _trapezoid(f, c, R, 2 * nodes, depth, top)
        scale = float(np.max(np.abs(fine[core]))) if d > 0 else float(abs(fine[depth]))
        allowed = aliasing_rtol * scale + noise_coarse + noise_fine
        gap = np.abs(coarse - fine)
        if np.all(gap <= allowed):
            break
        if 2 * nodes >= constants.QUADRATURE_MAX_NODES:
            worst = int(np.argmax(gap - allowed)) - depth
            raise UncertifiedWindowError(
                f"aliasing not certified at r_{worst} with {2 * nodes} nodes on |z| = {R}"
            )
        nodes *= 2

    # Keep only the depths the roundoff bound resolves; at least r_{-deg f}
    resolved = noise_fine[: depth + 1][::-1] <= constants.QUADRATURE_RESOLVED_RTOL * max(
        scale, np.finfo(float).tiny)
    keep = d
    for p in range(d, depth + 1):
        if not resolved[p]:
            break
        keep = p
    if keep < depth:
        logger.debug(f"Quadrature window capped at depth {keep} of {depth} by roundoff")
    start = depth - keep
    logger.debug(
        f"Quadrature window: depth={keep}, upper={top}, R={R:.4g}, nodes={2 * nodes}, "
        f"max imag={imag:.2e}"
    )
    return LaurentWindow(
        values=fine[start:],
        lower=keep,
        upper=top,
        method=LaurentMethod.QUADRATURE,
        radius=R,
        nodes=2 * nodes,
        noise=noise_fine[start:],
        aliasing_error=float(np.max(gap[start:])),
        tail_ratio=ratio,
        tail_certified=tail_certified,
        degree=d,
    )


# =============================================================================
# Variances
# =============================================================================

def limiting_variance(w: LaurentWindow) -> float:
    """sum_{l>=1} l * r_l * r_{-l} over the window."""
    top = min(w.upper, w.lower)
    return float(sum(ell * float(w.coefficient(ell)) * float(w.coefficient(-ell))
                     for ell in range(1, top + 1)))


def finite_n_variance(w: LaurentWindow, n: int) -> float:
    """sum_{l>=1} min(l, n) * r_l * r_{-l}; C_2 of the n x n Toeplitz section."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    top = min(w.upper, w.lower)
    return float(sum(min(ell, n) * float(w.coefficient(ell)) * float(w.coefficient(-ell))
                     for ell in range(1, top + 1)))


# =============================================================================
# Partial fractions
# =============================================================================

def principal_parts(f: PolynomialLike, c: RationalSymbol, exact: bool = False,
                    f_exact: Optional[Sequence[Fraction]] = None) -> NDArray[Any]:
    """
    Principal-part coefficients of f o c at each pole.

    Returns alpha of shape (m, deg f) with
    f o c = r_+ + sum_j sum_p alpha[j, p-1] (z - b_j)^-p.
    """
    if exact:
        f_coef = list(f_exact) if f_exact is not None else [
            Fraction(float(v)) for v in as_polynomial(f).coef]
        while len(f_coef) > 1 and f_coef[-1] == 0:
            f_coef.pop()
    else:
        f_coef = list(as_polynomial(f).coef)
    d = len(f_coef) - 1
    m = c.m
    zero = Fraction(0) if exact else 0.0
    alpha = np.array([[zero] * d for _ in range(m)], dtype=object if exact else float)
    alpha = alpha.reshape(m, d)
    if d == 0:
        return alpha
    a = _coerce(c.residues, exact)
    b = _coerce(c.poles, exact)
    high = d - 1
    for j in range(m):
        # c around b_j in w = z - b_j, exponents -1..high
        series = np.array([zero] * (high + 2), dtype=object if exact else float)
        series[0] = a[j]
        series[1] += b[j]
        if high >= 1:
            series[2] += 1
        for i in range(m):
            if i == j:
                continue
            delta = b[j] - b[i]
            term = a[i] / delta
            for q in range(high + 1):
                series[q + 1] += term
                term = -term / delta
        expanded, low = _horner_series(f_coef, series, -1, high, exact)
        for idx, value in enumerate(expanded):
            e = low + idx
            if -d <= e <= -1:
                alpha[j, -e - 1] = value
    return alpha


def positive_part(f: PolynomialLike, c: RationalSymbol, exact: bool = False,
                  f_exact: Optional[Sequence[Fraction]] = None) -> NDArray[Any]:
    """Coefficients r_0..r_{deg f} of the polynomial part of f o c."""
    source: Any = f_exact if (exact and f_exact is not None) else (
        [Fraction(float(v)) for v in as_polynomial(f).coef] if exact else f)
    values = laurent_series_coefficients(source, c.residues, c.poles, 0, exact=exact)
    return values


def symbolic_laurent_coefficients(f: PolynomialLike, c: RationalSymbol,
                                  depth: int) -> Dict[int, Fraction]:
    """
    Exact Laurent coefficients r_{-depth}..r_{deg f} via a sympy series expansion.

    Used as an independent cross-check of the series and quadrature routes.
    """
    f = as_polynomial(f)
    d = degree(f)
    u = sympy.Symbol('u')
    rat = [_to_sympy(v) for v in f.coef]
    a = [_to_sympy(v) for v in c.residues]
    b = [_to_sympy(v) for v in c.poles]
    c_u = 1 / u + sum(aj * u / (1 - bj * u) for aj, bj in zip(a, b))
    expr = sum(coef * c_u ** q for q, coef in enumerate(rat)) * u ** d
    series = sympy.series(sympy.together(expr), u, 0, depth + d + 1).removeO()
    poly = sympy.Poly(sympy.expand(series), u)
    out: Dict[int, Fraction] = {}
    for ell in range(-depth, d + 1):
        value = sympy.Rational(poly.coeff_monomial(u ** (d - ell)))
        out[ell] = Fraction(int(value.p), int(value.q))
    return out


def _to_sympy(value: float) -> sympy.Rational:
    exact = Fraction(float(value))
    return sympy.Rational(exact.numerator, exact.denominator)
