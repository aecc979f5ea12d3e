"""
Finite-n cumulants of one-sided banded matrices.

For a matrix B with upper bandwidth b and the projection P_n onto the first
n coordinates,

    C_m^(n)(B) = m! sum_j (-1)^(j+1)/j sum_{l_1+..+l_j=m} Tr P_n B^(l_1) P_n ... B^(l_j) P_n
                 / (l_1! ... l_j!)

and for a MOPE along an admissible path C_m(X_n(f)) = C_m^(n)(f(J)). This
module evaluates those sums with exact rational prefactors, the MGF
determinant det P_n exp_r(lambda f(J)) P_n, the windowed difference of two
cumulants, and the nested-commutator traces of the BCH expansion.
"""

import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import lu_factor

from .. import constants
from ..enums import MatrixKind
from ..exceptions import ConfigError, HypothesisViolatedError, WindowExhaustedError
from ..io.loaders import FamilySpec, family_spec_to_dict
from .banded import (
    HessenbergMatrix,
    SplitPair,
    add,
    commutator,
    dynkin_bracket,
    exp_trunc,
    matrix_polynomial,
    multiply,
    projected_powers,
    trace_of_blocks,
)
from .combinatorics import DynkinWord, cumulant_prefactors, dynkin_words, word_letters
from .lattice_path import LatticePath
from .recurrence import polynomial_of_J
from .symbol import PolynomialLike, as_polynomial, degree

logger = logging.getLogger(__name__)


@dataclass
class CumulantReport:
    """
    Cumulants C_1..C_{m_max} of one matrix at one size n.

    Attributes:
        n: Projection size
        values: m -> C_m^(n)
        matrix_id: Which matrix the cumulants belong to (None for exact enumeration)
        f: Coefficients c_0..c_d of the test function
        scales: m -> sum of |prefactor * trace| (cancellation scale)
        metadata: Family, path and symbol provenance
    """
    n: int
    values: Dict[int, float]
    matrix_id: Optional[MatrixKind]
    f: Tuple[float, ...] = ()
    scales: Dict[int, float] = field(default_factory=dict)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        orders = sorted(self.values)
        if orders != list(range(1, len(orders) + 1)):
            raise ValueError(f"cumulant orders must run contiguously from 1, got {orders}")
        bad = [m for m, v in self.values.items() if not math.isfinite(v)]
        if bad:
            raise ValueError(f"non-finite cumulants at orders {bad}")

    @property
    def m_max(self) -> int:
        return len(self.values)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "matrix": self.matrix_id.value if self.matrix_id is not None else "enumeration",
            "f": list(self.f),
            "cumulants": {str(m): v for m, v in sorted(self.values.items())},
            "scales": {str(m): v for m, v in sorted(self.scales.items())},
            "metadata": self.metadata,
        }


def thread_count() -> int:
    """Worker threads allowed by MOPE_THREADS (default 1)."""
    raw = os.environ.get(constants.THREADS_ENV_VAR)
    if raw is None or raw.strip() == "":
        return constants.DEFAULT_THREADS
    try:
        value = int(raw)
    except ValueError as e:
        raise ConfigError(f"{constants.THREADS_ENV_VAR} must be an integer, got {raw!r}") from e
    if value < 1:
        raise ConfigError(f"{constants.THREADS_ENV_VAR} must be >= 1, got {value}")
    return value


def _composition_terms(blocks: Sequence[NDArray[Any]], m: int,
                       exact: bool) -> List[Any]:
    """prefactor * trace for every composition of m, in lexicographic order."""
    pairs = cumulant_prefactors(m)

    def term(pair: Tuple[Tuple[int, ...], Fraction]) -> Any:
        parts, prefactor = pair
        trace = trace_of_blocks(blocks, parts)
        return prefactor * trace if exact else float(prefactor) * float(trace)

    workers = thread_count()
    if workers > 1 and len(pairs) > 1:
        # map keeps input order, so the reduction order is fixed
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(term, pairs))
    return [term(pair) for pair in pairs]


def cumulant_with_scale(B: HessenbergMatrix, n: int, m: int) -> Tuple[Any, float]:
    """
    C_m^(n)(B) and its cancellation scale sum |prefactor * trace|.

    Raises:
        WindowExhaustedError: Unless B is exact on n + (m-1) b rows
    """
    if m < 1:
        raise ValueError(f"cumulant order must be >= 1, got {m}")
    if n == 0:
        return 0.0, 0.0
    blocks = projected_powers(B, n, m)
    terms = _composition_terms(blocks, m, B.is_exact)
    total = sum(terms[1:], terms[0])
    scale = float(sum(abs(float(t)) for t in terms))
    return total, scale


def cumulant(B: HessenbergMatrix, n: int, m: int) -> Any:
    """
    C_m^(n)(B).

    For the Toeplitz matrix of z + a/z, C_2^(3) = a.
    """
    return cumulant_with_scale(B, n, m)[0]


def cumulants_upto(B: HessenbergMatrix, n: int, m_max: int
                   ) -> Tuple[Dict[int, float], Dict[int, float]]:
    """C_1..C_{m_max} sharing one set of projected powers."""
    if n == 0:
        return {m: 0.0 for m in range(1, m_max + 1)}, {m: 0.0 for m in range(1, m_max + 1)}
    blocks = projected_powers(B, n, m_max)
    values: Dict[int, float] = {}
    scales: Dict[int, float] = {}
    for m in range(1, m_max + 1):
        terms = _composition_terms(blocks, m, B.is_exact)
        values[m] = float(sum(terms[1:], terms[0]))
        scales[m] = float(sum(abs(float(t)) for t in terms))
    return values, scales


def matrix_report(B: HessenbergMatrix, n: int, m_max: int, matrix_id: MatrixKind,
                  f: PolynomialLike = (0.0, 1.0),
                  metadata: Optional[Dict[str, Any]] = None) -> CumulantReport:
    values, scales = cumulants_upto(B, n, m_max)
    return CumulantReport(
        n=n,
        values=values,
        matrix_id=matrix_id,
        f=tuple(float(c) for c in as_polynomial(f).coef),
        scales=scales,
        metadata=metadata or {},
    )


def rows_for_statistic(f: PolynomialLike, n: int, m_max: int) -> int:
    """Rows of f(J) needed for C_{m_max}^(n)."""
    return n + max(m_max - 1, 0) * degree(f)


def linear_statistic_cumulants(spec: FamilySpec, path: LatticePath, f: PolynomialLike,
                               n: int, m_max: int, vary_with_n: bool = True
                               ) -> CumulantReport:
    """
    Cumulants of X_n(f) = sum_i f(x_i) as C_m^(n)(f(J)).

    Args:
        spec: Family; its n_scale is replaced by n when vary_with_n is set
        path: Admissible path, long enough for n + m_max*deg f rows
        f: Test polynomial
        n: Number of particles
        m_max: Highest cumulant order

    Returns:
        CumulantReport for matrix f_J
    """
    if vary_with_n:
        spec = spec.with_n_scale(n)
    rows = rows_for_statistic(f, n, m_max)
    F = polynomial_of_J(spec, path, f, rows)
    report = matrix_report(
        F, n, m_max, MatrixKind.F_OF_J, f,
        metadata={"family": family_spec_to_dict(spec), "path": path.prefix(n).to_dict()},
    )
    logger.debug(f"Cumulants of X_{n}(f): {report.values}")
    return report


# =============================================================================
# MGF determinant
# =============================================================================

def _det_lu(M: NDArray[np.float64]) -> float:
    if M.shape[0] == 0:
        return 1.0
    lu, piv = lu_factor(M)
    swaps = int(np.count_nonzero(piv != np.arange(piv.size)))
    sign = -1.0 if swaps % 2 else 1.0
    return float(sign * np.prod(np.diag(lu)))


def mgf_determinant(J: HessenbergMatrix, f: PolynomialLike, lam: float, n: int,
                    r: Optional[int] = None, m_max: int = 4) -> float:
    """
    det P_n exp_r(lambda f(J)) P_n by LU with partial pivoting.

    This equals E[prod_i exp_r(lambda f(x_i))] and agrees with
    E[exp_r(lambda X_n(f))] through order lambda^r.

    Args:
        J: Recurrence matrix, exact on n + r*deg f rows
        f: Test polynomial
        lam: lambda
        n: Block size
        r: Truncation order; default m_max + 2

    Raises:
        WindowExhaustedError: If J has too few exact rows
    """
    order = m_max + constants.MGF_ORDER_MARGIN if r is None else r
    if lam == 0 or n == 0:
        return 1.0
    F = matrix_polynomial(as_polynomial(f).coef, J)
    E = exp_trunc(F, lam, order)
    if E.exact_rows < n:
        raise WindowExhaustedError(
            f"exp_{order}(lambda f(J)) is exact on {E.exact_rows} rows, need {n}",
            requested=n,
            available=E.exact_rows,
        )
    return _det_lu(E.dense(n).astype(float))


def rows_for_mgf(f: PolynomialLike, n: int, r: int) -> int:
    """Rows of J needed by mgf_determinant."""
    d = degree(f)
    return n + max(d - 1, 0) + max(r - 1, 0) * d


_STENCIL = {
    1: ((-2, 1.0 / 12), (-1, -8.0 / 12), (1, 8.0 / 12), (2, -1.0 / 12)),
    2: ((-2, -1.0 / 12), (-1, 16.0 / 12), (0, -30.0 / 12), (1, 16.0 / 12), (2, -1.0 / 12)),
    3: ((-2, -0.5), (-1, 1.0), (1, -1.0), (2, 0.5)),
    4: ((-2, 1.0), (-1, -4.0), (0, 6.0), (1, -4.0), (2, 1.0)),
}


def cumulants_from_mgf(J: HessenbergMatrix, f: PolynomialLike, n: int, m_max: int = 3,
                       step: float = constants.STENCIL_STEP,
                       r: Optional[int] = None) -> Dict[int, float]:
    """
    C_1..C_{m_max} (m_max <= 4) as derivatives of log det P_n exp_r(lambda f(J)) P_n.

    Five-point central differences at lambda in {0, +-h, +-2h}; a cross-check
    of the trace formula only.
    """
    if not 1 <= m_max <= 4:
        raise ValueError(f"stencil supports orders 1..4, got {m_max}")
    order = m_max + constants.MGF_ORDER_MARGIN if r is None else r
    log_m = {
        k: math.log(mgf_determinant(J, f, k * step, n, r=order))
        for k in (-2, -1, 0, 1, 2)
    }
    out = {}
    for m in range(1, m_max + 1):
        out[m] = sum(w * log_m[k] for k, w in _STENCIL[m]) / step ** m
    return out


# =============================================================================
# Windowed differences
# =============================================================================

def locality_radius(m: int, bandwidth: int) -> int:
    """2 m^2 b: C_m^(n) depends only on entries within this distance of n."""
    return 2 * m * m * max(bandwidth, 1)


def _difference_form(W: NDArray[np.float64], split_at: int, m: int) -> float:
    """sum prefactor * (Tr P W^l1 P ... P - Tr P W^m P) on a dense window."""
    P = np.zeros(W.shape[0])
    P[:split_at] = 1.0
    powers = [np.eye(W.shape[0])]
    for _ in range(m):
        powers.append(powers[-1] @ W)
    projected = [None] + [P[:, None] * M * P[None, :] for M in powers[1:]]
    full = float(np.trace(projected[m]))
    total = 0.0
    for parts, prefactor in cumulant_prefactors(m):
        acc = projected[parts[0]]
        for l in parts[1:]:
            acc = acc @ projected[l]
        total += float(prefactor) * (float(np.trace(acc)) - full)
    return total


def cumulant_difference_windowed(B1: HessenbergMatrix, B2: HessenbergMatrix, n: int,
                                 m: int) -> float:
    """
    C_m^(n)(B1) - C_m^(n)(B2) from the entries with |i-n|, |k-n| < 2 m^2 b.

    For m >= 2 the prefactors sum to zero, so subtracting Tr P_n B^m P_n from
    every composition leaves terms that each contain a Q_n; those only see
    indices within m*b of n. m = 1 is the plain diagonal difference.

    Raises:
        WindowExhaustedError: If either matrix is not exact up to n + 2 m^2 b
    """
    if m < 1:
        raise ValueError(f"cumulant order must be >= 1, got {m}")
    if m == 1:
        d1 = B1.window(0, n, 0, n).astype(float)
        d2 = B2.window(0, n, 0, n).astype(float)
        return float(np.trace(d1) - np.trace(d2))
    radius = locality_radius(m, max(B1.bandwidth, B2.bandwidth))
    lo = max(0, n - radius)
    hi = n + radius
    W1 = B1.window(lo, hi, lo, hi).astype(float)
    W2 = B2.window(lo, hi, lo, hi).astype(float)
    return _difference_form(W1, n - lo, m) - _difference_form(W2, n - lo, m)


# =============================================================================
# Nested commutators
# =============================================================================

@dataclass(frozen=True)
class CommutatorTrace:
    """
    Tr P_n [B_-^(u_1), B_+^(v_1), ...] P_n with its cancellation scale.

    Attributes:
        word: (u_1, v_1, ..., u_j, v_j)
        n: Projection size
        value: The trace
        scale: Same nested expression with |.| entries and sums
        support: Number of leading columns where [B_-, B_+] is nonzero
    """
    word: DynkinWord
    n: int
    value: float
    scale: float
    support: int

    @property
    def degree(self) -> int:
        return int(sum(self.word))


def _abs(B: HessenbergMatrix) -> HessenbergMatrix:
    return HessenbergMatrix(np.abs(B.data.astype(float)), B.bandwidth)


def _scale_bracket(pair: SplitPair, word: DynkinWord) -> HessenbergMatrix:
    """|X_1| S + S |X_1| applied right to left; bounds every entry of the bracket."""
    mats = [_abs(pair.minus) if c == 0 else _abs(pair.plus) for c in word_letters(word)]
    acc = mats[-1]
    for X in reversed(mats[:-1]):
        acc = add(multiply(X, acc), multiply(acc, X))
    return acc


def commutator_support(pair: SplitPair, rtol: float = constants.STRUCTURAL_ZERO_RTOL) -> int:
    """
    1 + last column where [B_-, B_+] has an entry above rtol times its scale.

    Raises:
        HypothesisViolatedError: If nonzero columns reach the second half of
            the window, so no finite s with [B_-, B_+] Q_s = 0 is visible
    """
    C = commutator(pair.minus, pair.plus)
    bound = add(multiply(_abs(pair.minus), _abs(pair.plus)),
                multiply(_abs(pair.plus), _abs(pair.minus)))
    rows = min(C.exact_rows, bound.exact_rows)
    values = np.abs(C.window(0, rows, 0, rows).astype(float))
    limit = rtol * bound.window(0, rows, 0, rows) + constants.STRUCTURAL_ZERO_ATOL
    nonzero = np.any(values > limit, axis=0)
    columns = np.nonzero(nonzero)[0]
    support = int(columns[-1]) + 1 if columns.size else 0
    if support > rows // 2:
        raise HypothesisViolatedError(
            f"[B_-, B_+] has nonzero entries up to column {support - 1} of a "
            f"{rows}-row window; its columns are not localized"
        )
    return support


def bch_commutator_trace(pair: SplitPair, n: int, word: DynkinWord,
                         rtol: float = constants.STRUCTURAL_ZERO_RTOL) -> CommutatorTrace:
    """
    Tr P_n [B_-^(u_1), B_+^(v_1), ..., B_-^(u_j), B_+^(v_j)] P_n.

    For total degree >= 3 the trace vanishes once n clears the commutator
    support plus the word's band. Degree 2 (word (1, 1)) gives
    -C_2^(n)(B_- + B_+), which does not vanish.

    Raises:
        HypothesisViolatedError: If [B_-, B_+] is not column-localized
        WindowExhaustedError: If the pair is too short for the bracket
    """
    support = commutator_support(pair, rtol)
    bracket = dynkin_bracket(pair, word)
    bound = _scale_bracket(pair, word)
    if bracket.exact_rows < n:
        raise WindowExhaustedError(
            f"bracket {word} is exact on {bracket.exact_rows} rows, need {n}",
            requested=n,
            available=bracket.exact_rows,
        )
    value = float(np.diagonal(bracket.dense(n)).astype(float).sum())
    scale = float(np.diagonal(bound.dense(n)).sum())
    return CommutatorTrace(tuple(word), n, value, scale, support)


def dynkin_cumulant(pair: SplitPair, n: int, m: int) -> Tuple[float, float]:
    """
    -m! Tr P_n (degree-m Dynkin term of log(e^B_- e^B_+)) P_n, with its scale.

    Equals C_2^(n) exactly for m = 2; for m >= 3 both sides vanish once n
    clears the localisation threshold.
    """
    fact = math.factorial(m)
    total = 0.0
    scale = 0.0
    for word, coef in dynkin_words(m):
        bracket = dynkin_bracket(pair, word)
        trace = float(np.diagonal(bracket.dense(n)).astype(float).sum())
        total += float(coef) * trace
        scale += abs(float(coef)) * float(np.diagonal(_scale_bracket(pair, word).dense(n)).sum())
    return -fact * total, fact * scale


def dense_dynkin_trace(A1: NDArray[np.float64], A2: NDArray[np.float64],
                       m: int) -> Tuple[float, float]:
    """
    Trace of the degree-m Dynkin term of log(e^A1 e^A2) for finite matrices.

    Every term is a commutator, so the trace is zero for m >= 2. Returns
    (value, scale) with scale the sum of |coefficient| * Tr|bracket| bounds.
    """
    A1 = np.asarray(A1, dtype=float)
    A2 = np.asarray(A2, dtype=float)
    total = 0.0
    scale = 0.0
    for word, coef in dynkin_words(m):
        letters = word_letters(word)
        mats = [A1 if c == 0 else A2 for c in letters]
        bounds = [np.abs(M) for M in mats]
        acc, acc_bound = mats[-1], bounds[-1]
        for X, Xb in zip(reversed(mats[:-1]), reversed(bounds[:-1])):
            acc = X @ acc - acc @ X
            acc_bound = Xb @ acc_bound + acc_bound @ Xb
        total += float(coef) * float(np.trace(acc))
        scale += abs(float(coef)) * float(np.trace(acc_bound))
    return total, scale


def moments_to_cumulants(moments: Sequence[Any]) -> List[Any]:
    """
    Cumulants C_1..C_M from raw moments M_1..M_M.

    C_m = M_m - sum_{i=1}^{m-1} binom(m-1, i-1) C_i M_{m-i}; works for
    floats and Fractions alike.
    """
    M = [1] + list(moments)
    C: List[Any] = [0]
    for m in range(1, len(M)):
        value = M[m]
        for i in range(1, m):
            value = value - math.comb(m - 1, i - 1) * C[i] * M[m - i]
        C.append(value)
    return C[1:]
