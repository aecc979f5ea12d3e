"""
Path-indexed recurrence matrices.

Along a path k_0, k_1, ... the polynomials p_{k_n} form a basis and
multiplication by x acts on it through the lower Hessenberg matrix J:

    x p_{k_n} = p_{k_{n+1}} + b_{k_n, j_n} p_{k_n}
                + sum_r ( sum_l a_{k_n, l} prod_{i=n-r+1}^{n} B_{i,l} ) p_{k_{n-1-r}}

with B_{i,l} = b_{k_{i-1}-e_l, l} - b_{k_{i-1}-e_l, j_{i-1}}. Replacing the
coefficients by their limits gives T_c, the Toeplitz operator of the
limiting symbol written in the basis pi_{k_n}(z) = prod_j (z - b_j)^{k_{n,j}}.
The change of basis S between monomials and pi_{k_n} conjugates the
classical Toeplitz matrix into T_c.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import Polynomial
from numpy.typing import ArrayLike, NDArray
from scipy.linalg import solve_triangular

from ..exceptions import PathError, UnsupportedFamilyError, WindowTooNarrowError
from ..io.loaders import FamilySpec
from .banded import HessenbergMatrix, add, identity, matrix_polynomial, multiply, scale
from .families import nevai_limits, nn_coeffs_batch
from .lattice_path import LatticePath
from .symbol import (
    LaurentWindow,
    PolynomialLike,
    RationalSymbol,
    as_polynomial,
    degree,
    positive_part,
    principal_parts,
)

logger = logging.getLogger(__name__)


def _check_path(path: LatticePath, m: int, steps_needed: int) -> None:
    if path.m != m:
        raise PathError(f"path dimension {path.m} differs from m={m}")
    if path.length < steps_needed:
        raise PathError(
            f"path of length {path.length} is too short; need {steps_needed} steps"
        )


def _fill_from_products(data: NDArray[np.float64], weights: NDArray[np.float64],
                        factors: NDArray[np.float64]) -> None:
    """
    data[n, n-1-r] += sum_l weights[n, l] * prod_{i=n-r+1}^{n} factors[i, l].

    Running products over i are accumulated row by row, so the whole fill
    costs O(rows^2 m).
    """
    rows = data.shape[0]
    for n in range(1, rows):
        data[n, n - 1] += float(weights[n].sum())
        if n < 2:
            continue
        # factors[n], factors[n-1], ..., factors[2]
        products = np.cumprod(factors[n:1:-1], axis=0)
        values = products @ weights[n]
        data[n, : n - 1] += values[::-1]


def build_J(spec: FamilySpec, path: LatticePath, rows: int) -> HessenbergMatrix:
    """
    Recurrence matrix J on its first `rows` rows.

    Args:
        spec: Family with its n_scale
        path: Admissible path of length >= rows
        rows: Number of exact rows

    Returns:
        HessenbergMatrix with bandwidth 1

    Raises:
        PathError: If the path is too short or has the wrong dimension
        UnsupportedFamilyError: If some a_{k,l} is nonzero at k_l = 0
    """
    _check_path(path, spec.m, rows)
    m = spec.m
    K = path.multi_indices[:rows]
    steps = path.steps[:rows]
    A, Bc = nn_coeffs_batch(spec, K)

    boundary = (K == 0) & (A != 0)
    if np.any(boundary):
        n_bad, l_bad = np.argwhere(boundary)[0]
        raise UnsupportedFamilyError(
            f"a_(k,{l_bad + 1}) = {A[n_bad, l_bad]} at k = {K[n_bad].tolist()} with "
            f"k_{l_bad + 1} = 0; p_(k - e_{l_bad + 1}) is undefined"
        )

    # factors[i, l] = B_{i,l}, built from k_{i-1} and j_{i-1}
    factors = np.zeros((rows, m))
    if rows > 1:
        prev = K[:-1]
        prev_steps = steps[:-1]
        for l in range(m):
            shifted = prev.copy()
            shifted[:, l] = np.maximum(shifted[:, l] - 1, 0)
            _, b_shift = nn_coeffs_batch(spec, shifted)
            diff = b_shift[:, l] - b_shift[np.arange(rows - 1), prev_steps]
            valid = (prev[:, l] > 0) & (prev_steps != l)
            factors[1:, l] = np.where(valid, diff, 0.0)

    data = np.zeros((rows, rows + 1))
    idx = np.arange(rows)
    data[idx, idx + 1] = 1.0
    data[idx, idx] = Bc[idx, steps]
    _fill_from_products(data, A, factors)
    logger.debug(f"Built J: {spec.family.value}, m={m}, n_scale={spec.n_scale}, rows={rows}")
    return HessenbergMatrix(data, 1)


def _shift_factors(poles: NDArray[np.float64], steps: NDArray[np.int64],
                   rows: int) -> NDArray[np.float64]:
    """factors[i, l] = b_l - b_{j_{i-1}} (zero when j_{i-1} = l)."""
    factors = np.zeros((rows, poles.size))
    if rows > 1:
        factors[1:, :] = poles[None, :] - poles[steps[: rows - 1]][:, None]
    return factors


def shift_matrix_Z(symbol: RationalSymbol, path: LatticePath, rows: int) -> HessenbergMatrix:
    """Multiplication by z in the pi basis: superdiagonal 1, diagonal b_{j_n}."""
    _check_path(path, symbol.m, rows)
    data = np.zeros((rows, rows + 1))
    idx = np.arange(rows)
    data[idx, idx + 1] = 1.0
    data[idx, idx] = symbol.poles[path.steps[:rows]]
    return HessenbergMatrix(data, 1)


def resolvent_matrix(symbol: RationalSymbol, path: LatticePath, pole: int,
                     rows: int) -> HessenbergMatrix:
    """
    D_l: polynomial part of pi_{k_n}(z) / (z - b_l) in the pi basis.

    (D_l)[n, n-1-r] = prod_{i=n-r+1}^{n} (b_l - b_{j_{i-1}}); strictly lower triangular.
    """
    _check_path(path, symbol.m, rows)
    weights = np.zeros((rows, symbol.m))
    weights[:, pole] = 1.0
    data = np.zeros((rows, rows))
    _fill_from_products(data, weights, _shift_factors(symbol.poles, path.steps, rows))
    return HessenbergMatrix(data, 0)


def build_Tc(symbol: RationalSymbol, path: LatticePath, rows: int) -> HessenbergMatrix:
    """
    Limiting matrix T_c = Z + sum_l a_l D_l on its first `rows` rows.

    Raises:
        PathError: If the path is too short or has the wrong dimension
    """
    _check_path(path, symbol.m, rows)
    data = np.zeros((rows, rows + 1))
    idx = np.arange(rows)
    data[idx, idx + 1] = 1.0
    data[idx, idx] = symbol.poles[path.steps[:rows]]
    weights = np.broadcast_to(symbol.residues, (rows, symbol.m))
    _fill_from_products(data, weights, _shift_factors(symbol.poles, path.steps, rows))
    return HessenbergMatrix(data, 1)


def build_T_composed(f: PolynomialLike, symbol: RationalSymbol, path: LatticePath,
                     rows: int) -> HessenbergMatrix:
    """
    T_{f o c} in the pi basis from the partial-fraction form of f o c.

    f o c = r_+(z) + sum_j sum_p alpha_{j,p} (z - b_j)^-p, so
    T_{f o c} = r_+(Z) + sum_{j,p} alpha_{j,p} D_j^p.

    Returns:
        HessenbergMatrix with bandwidth deg f
    """
    f = as_polynomial(f)
    d = degree(f)
    _check_path(path, symbol.m, rows + d)
    r_plus = positive_part(f, symbol)
    alpha = principal_parts(f, symbol)
    Z = shift_matrix_Z(symbol, path, rows + d)
    result = matrix_polynomial(r_plus, Z).truncate(rows)
    for j in range(symbol.m):
        D = resolvent_matrix(symbol, path, j, rows)
        power = identity(rows)
        for p in range(d):
            power = multiply(power, D)
            if alpha[j, p] != 0:
                result = add(result, scale(power, float(alpha[j, p])))
    return result


def polynomial_of_J(spec: FamilySpec, path: LatticePath, f: PolynomialLike,
                    rows: int) -> HessenbergMatrix:
    """f(J) exact on `rows` rows (J is built with deg f - 1 extra rows)."""
    d = degree(f)
    J = build_J(spec, path, rows + max(d - 1, 0))
    return matrix_polynomial(as_polynomial(f).coef, J).truncate(rows)


def polynomial_of_Tc(symbol: RationalSymbol, path: LatticePath, f: PolynomialLike,
                     rows: int) -> HessenbergMatrix:
    """f(T_c) exact on `rows` rows."""
    d = degree(f)
    Tc = build_Tc(symbol, path, rows + max(d - 1, 0))
    return matrix_polynomial(as_polynomial(f).coef, Tc).truncate(rows)


# =============================================================================
# Toeplitz side
# =============================================================================

def toeplitz_matrix(window: LaurentWindow, size: int) -> HessenbergMatrix:
    """
    Toeplitz matrix (T)_{jk} = r_{k-j} on its first `size` rows.

    The result has bandwidth window.upper and keeps the window's number type.

    Raises:
        WindowTooNarrowError: If the window does not reach r_{-(size-1)}
    """
    if size < 0:
        raise ValueError(f"size must be >= 0, got {size}")
    if window.lower < size - 1:
        raise WindowTooNarrowError(
            f"Toeplitz section of size {size} needs r_{-(size - 1)}, window reaches "
            f"r_{-window.lower}"
        )
    band = window.upper
    exact = window.values.dtype == object
    zero: Any = Fraction(0) if exact else 0.0
    data = np.full((size, size + band), zero, dtype=object if exact else float)
    for offset in range(-(size - 1), band + 1):
        value = window.coefficient(offset)
        if value == 0:
            continue
        i = np.arange(max(0, -offset), min(size, size + band - offset))
        data[i, i + offset] = value
    return HessenbergMatrix(data, band)


@dataclass(frozen=True)
class PiBasis:
    """
    Monic polynomials pi_{k_n}(z) = prod_j (z - b_j)^{k_{n,j}} along a path.

    Attributes:
        poles: b_1..b_m
        path: The lattice path; deg pi_{k_n} = n
    """
    poles: Tuple[Any, ...]
    path: LatticePath

    def coefficient_rows(self, size: int, exact: bool = False) -> NDArray[Any]:
        """Rows n < size hold the coefficients of pi_{k_n} in increasing powers."""
        _check_path(self.path, len(self.poles), max(size - 1, 0))
        zero: Any = Fraction(0) if exact else 0.0
        S = np.full((size, size), zero, dtype=object if exact else float)
        if size == 0:
            return S
        b = [_exact_scalar(v) if exact else float(v) for v in self.poles]
        S[0, 0] = Fraction(1) if exact else 1.0
        for n in range(size - 1):
            beta = b[int(self.path.steps[n])]
            S[n + 1, 1: n + 2] = S[n, : n + 1]
            S[n + 1, : n + 1] = S[n + 1, : n + 1] - beta * S[n, : n + 1]
        return S

    def polynomial(self, n: int) -> Polynomial:
        return Polynomial(self.coefficient_rows(n + 1)[n].astype(float))


def _exact_scalar(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(float(value))


def basis_change_S(poles: ArrayLike, path: LatticePath, size: int,
                   exact: bool = False) -> NDArray[Any]:
    """
    S with S_{j,k} = coefficient of z^k in pi_{k_j}(z); unit lower triangular.

    Example:
        >>> basis_change_S([1.0, -1.0], step_line(2, 2), 3)  # (z-1), (z-1)(z+1)
        array([[ 1.,  0.,  0.],
               [-1.,  1.,  0.],
               [-1.,  0.,  1.]])
    """
    values = np.asarray(poles, dtype=object if exact else float).reshape(-1)
    return PiBasis(tuple(values), path).coefficient_rows(size, exact=exact)


def inverse_S(poles: ArrayLike, path: LatticePath, size: int,
              exact: bool = False) -> NDArray[Any]:
    """
    S^-1: row n holds z^n expanded in pi_{k_0}, ..., pi_{k_n}.

    Exact inverses use z pi_{k_j} = pi_{k_{j+1}} + b_{j_j} pi_{k_j};
    float inverses use forward substitution.
    """
    if not exact:
        S = basis_change_S(poles, path, size)
        return solve_triangular(S, np.eye(size), lower=True, unit_diagonal=True)
    _check_path(path, len(np.atleast_1d(poles)), max(size - 1, 0))
    b = [_exact_scalar(v) for v in np.asarray(poles, dtype=object).reshape(-1)]
    diag = [b[int(s)] for s in path.steps[: max(size - 1, 0)]]
    inv = np.full((size, size), Fraction(0), dtype=object)
    if size == 0:
        return inv
    inv[0, 0] = Fraction(1)
    for n in range(size - 1):
        inv[n + 1, 1: n + 2] = inv[n, : n + 1]
        inv[n + 1, : n + 1] = inv[n + 1, : n + 1] + inv[n, : n + 1] * np.array(
            diag[: n + 1], dtype=object)
    return inv


def conjugated_toeplitz(window: LaurentWindow, poles: ArrayLike, path: LatticePath,
                        size: int, exact: bool = False) -> HessenbergMatrix:
    """
    S T S^-1 on its first `size` rows.

    Computed at size + upper so the kept rows see every column they need.
    """
    band = window.upper
    full = size + band
    if exact and window.values.dtype != object:
        window = LaurentWindow(
            values=np.array([_exact_scalar(v) for v in window.values], dtype=object),
            lower=window.lower,
            upper=window.upper,
            method=window.method,
            degree=window.degree,
        )
    T = toeplitz_matrix(window, full).dense(full)
    S = basis_change_S(poles, path, full, exact=exact)
    S_inv = inverse_S(poles, path, full, exact=exact)
    # S is lower triangular, so rows < size of S T only touch T rows < size
    M = S[:size, :size] @ T[:size, :] @ S_inv[:, : size + band]
    return HessenbergMatrix(M, band)


# =============================================================================
# Right limits
# =============================================================================

def right_limit_window(J: HessenbergMatrix, Tc: HessenbergMatrix, n: int,
                       window: int) -> NDArray[np.float64]:
    """|J - T_c| on rows and columns n-w..n+w; the centre entry is [w, w]."""
    if n - window < 0:
        raise ValueError(f"window {window} around n={n} leaves the matrix")
    lo, hi = n - window, n + window + 1
    gap = J.window(lo, hi, lo, hi).astype(float) - Tc.window(lo, hi, lo, hi).astype(float)
    return np.abs(gap)


def right_limit_gap(J: HessenbergMatrix, Tc: HessenbergMatrix, n: int, window: int) -> float:
    """max over |s|, |r| <= w of |J_{n+s,n+r} - (T_c)_{n+s,n+r}|."""
    return float(np.max(right_limit_window(J, Tc, n, window)))


def centre_row_gaps(J: HessenbergMatrix, Tc: HessenbergMatrix, n: int,
                    window: int) -> Dict[int, float]:
    """Gap on row n at column offsets -w..1 (superdiagonal, diagonal, subdiagonals)."""
    gaps = right_limit_window(J, Tc, n, window)[window]
    return {offset: float(gaps[window + offset]) for offset in range(-window, 2)}


def right_limit_sweep(spec: FamilySpec, path: LatticePath, nu: ArrayLike,
                      n_values: Sequence[int], window: int
                      ) -> List[Tuple[int, float, Dict[int, float]]]:
    """
    Gap between J (built with n_scale = n) and T_c around row n, for each n.

    Returns:
        List of (n, gap, centre-row gaps by column offset)
    """
    symbol = nevai_limits(spec, nu)
    out = []
    for n in n_values:
        rows = n + window + 1
        J = build_J(spec.with_n_scale(n), path, rows)
        Tc = build_Tc(symbol, path, rows)
        gap = right_limit_gap(J, Tc, n, window)
        out.append((n, gap, centre_row_gaps(J, Tc, n, window)))
        logger.debug(f"Right-limit gap at n={n}: {gap:.3e}")
    return out


def gap_ratios(sweep: Sequence[Tuple[int, float, Any]]) -> List[Optional[float]]:
    """gap(n_{i+1}) / gap(n_i) for consecutive sweep entries (None when gap(n_i) = 0)."""
    ratios: List[Optional[float]] = []
    for (_, g0, _), (_, g1, _) in zip(sweep, sweep[1:]):
        ratios.append(g1 / g0 if g0 > 0 else None)
    return ratios
