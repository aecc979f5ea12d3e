"""
One-sided banded matrices with honest truncation.

A HessenbergMatrix is the leading part of an infinite matrix B with
B[i, j] = 0 for j > i + b. Only the first exact_rows rows are stored, and
they are stored in full: row i holds columns 0..i+b. Rows past exact_rows
are unknown rather than zero, so every operation computes how many of its
own rows are still final and any read beyond them raises
WindowExhaustedError.

    product   rows = min(R_A, R_B - b_A), bandwidth b_A + b_B
    sum       rows = min(R_A, R_B),       bandwidth max(b_A, b_B)

Entries may be floats or fractions.Fraction (object arrays); the
arithmetic is the same numpy code either way.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..exceptions import WindowExhaustedError
from .combinatorics import DynkinWord, word_letters

logger = logging.getLogger(__name__)

Scalar = Union[float, int, Fraction]


@dataclass(frozen=True)
class HessenbergMatrix:
    """
    Leading exact_rows rows of a matrix with upper bandwidth b.

    Attributes:
        data: Array of shape (exact_rows, exact_rows + bandwidth)
        bandwidth: Upper bandwidth b >= 0
    """
    data: NDArray[Any]
    bandwidth: int

    def __post_init__(self) -> None:
        data = np.asarray(self.data)
        if data.dtype != object:
            data = data.astype(float)
        if self.bandwidth < 0:
            raise ValueError(f"bandwidth must be >= 0, got {self.bandwidth}")
        if data.ndim != 2 or data.shape[1] != data.shape[0] + self.bandwidth:
            raise ValueError(
                f"storage must have shape (R, R + {self.bandwidth}), got {data.shape}"
            )
        above = _above_band_mask(data.shape[0], data.shape[1], self.bandwidth)
        if np.any(data[above] != 0):
            raise ValueError(f"entries above bandwidth {self.bandwidth} must be zero")
        object.__setattr__(self, "data", data)

    @property
    def exact_rows(self) -> int:
        return int(self.data.shape[0])

    @property
    def is_exact(self) -> bool:
        """True for fractions.Fraction entries."""
        return bool(self.data.dtype == object)

    def _check_rows(self, stop: int) -> None:
        if stop > self.exact_rows:
            raise WindowExhaustedError(
                f"row {stop - 1} requested but only {self.exact_rows} rows are exact",
                requested=stop,
                available=self.exact_rows,
            )

    def entry(self, i: int, k: int) -> Any:
        if i < 0 or k < 0:
            raise IndexError(f"negative index ({i}, {k})")
        self._check_rows(i + 1)
        if k > i + self.bandwidth:
            return self.data.dtype.type(0) if not self.is_exact else Fraction(0)
        return self.data[i, k]

    def window(self, i0: int, i1: int, j0: int, j1: int) -> NDArray[Any]:
        """Dense copy of rows i0..i1-1 and columns j0..j1-1."""
        if i0 < 0 or j0 < 0 or i1 < i0 or j1 < j0:
            raise IndexError(f"bad window rows {i0}:{i1}, columns {j0}:{j1}")
        self._check_rows(i1)
        zero: Any = Fraction(0) if self.is_exact else 0.0
        out = np.full((i1 - i0, j1 - j0), zero, dtype=self.data.dtype)
        width = min(j1, self.data.shape[1]) - j0
        if width > 0:
            out[:, :width] = self.data[i0:i1, j0:j0 + width]
        return out

    def dense(self, size: int) -> NDArray[Any]:
        """Leading size x size block P_size B P_size."""
        return self.window(0, size, 0, size)

    def truncate(self, rows: int) -> "HessenbergMatrix":
        """Keep only the first rows exact rows."""
        self._check_rows(rows)
        return HessenbergMatrix(self.data[:rows, : rows + self.bandwidth], self.bandwidth)

    def to_float(self) -> "HessenbergMatrix":
        if not self.is_exact:
            return self
        return HessenbergMatrix(self.data.astype(float), self.bandwidth)

    def max_abs(self) -> float:
        if self.data.size == 0:
            return 0.0
        return float(np.max(np.abs(self.data.astype(float))))

    def __matmul__(self, other: "HessenbergMatrix") -> "HessenbergMatrix":
        return multiply(self, other)

    def __add__(self, other: "HessenbergMatrix") -> "HessenbergMatrix":
        return add(self, other)

    def __sub__(self, other: "HessenbergMatrix") -> "HessenbergMatrix":
        return add(self, scale(other, -1))

    def __neg__(self) -> "HessenbergMatrix":
        return scale(self, -1)


def _above_band_mask(rows: int, cols: int, bandwidth: int) -> NDArray[np.bool_]:
    return np.arange(cols)[None, :] > np.arange(rows)[:, None] + bandwidth


def from_dense(matrix: ArrayLike, bandwidth: int,
               exact_rows: Optional[int] = None) -> HessenbergMatrix:
    """
    Wrap the leading rows of a dense square matrix.

    Rows of the result are final only when the dense matrix is the true
    leading block of the infinite matrix on the columns it covers; the
    last `bandwidth` rows therefore lose columns and are dropped unless
    exact_rows says otherwise.

    Raises:
        ValueError: If an entry above the band is nonzero
    """
    M = np.asarray(matrix)
    if M.dtype != object:
        M = M.astype(float)
    size = M.shape[0]
    rows = size - bandwidth if exact_rows is None else exact_rows
    if rows < 0 or rows + bandwidth > M.shape[1]:
        raise WindowExhaustedError(
            f"dense {M.shape} block cannot supply {rows} rows of bandwidth {bandwidth}",
            requested=rows,
            available=max(size - bandwidth, 0),
        )
    data = np.array(M[:rows, : rows + bandwidth], dtype=M.dtype)
    above = _above_band_mask(rows, rows + bandwidth, bandwidth)
    if np.any(data[above] != 0):
        raise ValueError(f"entries above bandwidth {bandwidth} must be zero")
    return HessenbergMatrix(data, bandwidth)


def identity(rows: int, exact: bool = False) -> HessenbergMatrix:
    if exact:
        data = np.full((rows, rows), Fraction(0), dtype=object)
        for i in range(rows):
            data[i, i] = Fraction(1)
        return HessenbergMatrix(data, 0)
    return HessenbergMatrix(np.eye(rows), 0)


def shift(rows: int, bandwidth: int = 1) -> HessenbergMatrix:
    """Pure upward shift: ones on superdiagonal `bandwidth`, zero elsewhere."""
    data = np.zeros((rows, rows + bandwidth))
    data[np.arange(rows), np.arange(rows) + bandwidth] = 1.0
    return HessenbergMatrix(data, bandwidth)


# =============================================================================
# Arithmetic
# =============================================================================

def multiply(A: HessenbergMatrix, B: HessenbergMatrix) -> HessenbergMatrix:
    """
    A @ B on the rows both factors make final.

    Raises:
        WindowExhaustedError: If no row of the product is final
    """
    rows = min(A.exact_rows, B.exact_rows - A.bandwidth)
    if rows <= 0:
        raise WindowExhaustedError(
            f"product needs {A.bandwidth + 1} rows of the right factor, "
            f"which has {B.exact_rows}",
            requested=A.bandwidth + 1,
            available=B.exact_rows,
        )
    inner = rows + A.bandwidth
    band = A.bandwidth + B.bandwidth
    data = A.data[:rows, :inner] @ B.data[:inner, : rows + band]
    return HessenbergMatrix(data, band)


def add(A: HessenbergMatrix, B: HessenbergMatrix) -> HessenbergMatrix:
    rows = min(A.exact_rows, B.exact_rows)
    band = max(A.bandwidth, B.bandwidth)
    return HessenbergMatrix(A.window(0, rows, 0, rows + band)
                            + B.window(0, rows, 0, rows + band), band)


def scale(B: HessenbergMatrix, factor: Scalar) -> HessenbergMatrix:
    return HessenbergMatrix(B.data * factor, B.bandwidth)


def add_identity(B: HessenbergMatrix, factor: Scalar = 1) -> HessenbergMatrix:
    """B + factor * I."""
    data = B.data.copy()
    idx = np.arange(B.exact_rows)
    data[idx, idx] = data[idx, idx] + factor
    return HessenbergMatrix(data, B.bandwidth)


def power(B: HessenbergMatrix, k: int) -> HessenbergMatrix:
    """B^k with bandwidth k*b; B^0 is the identity on B's rows."""
    if k < 0:
        raise ValueError(f"power must be >= 0, got {k}")
    result = identity(B.exact_rows, exact=B.is_exact)
    for _ in range(k):
        result = multiply(result, B)
    return result


def exp_trunc(B: HessenbergMatrix, t: Scalar = 1.0, r: int = 1) -> HessenbergMatrix:
    """
    Truncated exponential sum_{j<=r} (tB)^j / j! with bandwidth r*b.

    Example:
        >>> N = shift(6)
        >>> E = exp_trunc(N, 1.0, 2)  # I + N + N^2/2
        >>> E.entry(0, 2)
        0.5
    """
    if r < 0:
        raise ValueError(f"order must be >= 0, got {r}")
    tB = scale(B, t)
    acc = identity(B.exact_rows, exact=B.is_exact)
    for j in range(r, 0, -1):
        step = Fraction(1, j) if B.is_exact else 1.0 / j
        acc = add_identity(scale(multiply(acc, tB), step))
    return acc


def matrix_polynomial(coeffs: Sequence[Scalar], B: HessenbergMatrix) -> HessenbergMatrix:
    """f(B) = sum c_q B^q by Horner's rule, coefficients c_0..c_d."""
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        coeffs = [0]
    acc = scale(identity(B.exact_rows, exact=B.is_exact), coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = add_identity(multiply(acc, B), c)
    return acc


# =============================================================================
# Projected traces
# =============================================================================

def projected_powers(B: HessenbergMatrix, n: int, max_power: int) -> List[NDArray[Any]]:
    """
    Leading n x n blocks of B^1 .. B^max_power.

    Needs B exact on n + (max_power - 1) * b rows.
    """
    need = n + max(max_power - 1, 0) * B.bandwidth
    if B.exact_rows < need:
        raise WindowExhaustedError(
            f"P_n B^{max_power} P_n with n={n} needs {need} exact rows, have {B.exact_rows}",
            requested=need,
            available=B.exact_rows,
        )
    base = B.truncate(need)
    blocks = []
    current = base
    for _ in range(max_power):
        blocks.append(current.dense(n))
        if len(blocks) < max_power:
            current = multiply(current, base)
    return blocks


def trace_of_blocks(blocks: Sequence[NDArray[Any]], exponents: Sequence[int]) -> Any:
    """Tr M_{l_1} M_{l_2} ... M_{l_j} where blocks[l-1] = P_n B^l P_n."""
    mats = [blocks[l - 1] for l in exponents]
    if len(mats) == 1:
        return np.diagonal(mats[0]).sum()
    acc = mats[0]
    for M in mats[1:-1]:
        acc = acc @ M
    # Tr(XY) = sum_ij X_ij Y_ji
    return np.sum(acc * mats[-1].T)


def trace_product(B: HessenbergMatrix, n: int, exponents: Sequence[int]) -> Any:
    """
    Tr P_n B^(l_1) P_n B^(l_2) P_n ... B^(l_j) P_n.

    Raises:
        WindowExhaustedError: Unless B is exact on n + (max l - 1) b rows
    """
    if not exponents or any(l < 1 for l in exponents):
        raise ValueError(f"exponents must be positive, got {list(exponents)}")
    if n == 0:
        return 0.0
    blocks = projected_powers(B, n, max(exponents))
    return trace_of_blocks(blocks, exponents)


# =============================================================================
# Splitting and commutators
# =============================================================================

@dataclass(frozen=True)
class SplitPair:
    """
    B = B_minus + B_plus.

    Attributes:
        minus: Strictly lower triangular part (stored with bandwidth 0)
        plus: Diagonal and the first b superdiagonals
    """
    minus: HessenbergMatrix
    plus: HessenbergMatrix

    @property
    def exact_rows(self) -> int:
        return min(self.minus.exact_rows, self.plus.exact_rows)

    def total(self) -> HessenbergMatrix:
        return add(self.minus, self.plus)


def split(B: HessenbergMatrix, band_plus: Optional[int] = None) -> SplitPair:
    """Split B into its strictly lower part and its upper banded part."""
    band = B.bandwidth if band_plus is None else band_plus
    if band < B.bandwidth:
        raise ValueError(f"band_plus {band} is below the bandwidth {B.bandwidth}")
    R = B.exact_rows
    full = B.window(0, R, 0, R + band)
    rows = np.arange(R)[:, None]
    cols = np.arange(R + band)[None, :]
    zero: Any = Fraction(0) if B.is_exact else 0.0
    lower = np.where(cols < rows, full, zero)[:, :R]
    upper = np.where(cols >= rows, full, zero)
    return SplitPair(HessenbergMatrix(lower, 0), HessenbergMatrix(upper, band))


def commutator(A: HessenbergMatrix, B: HessenbergMatrix) -> HessenbergMatrix:
    """[A, B] = AB - BA."""
    return add(multiply(A, B), scale(multiply(B, A), -1))


def nested_commutator(mats: Sequence[HessenbergMatrix]) -> HessenbergMatrix:
    """Right-nested bracket [X_1, [X_2, [..., X_k]]]; a single matrix is its own bracket."""
    if not mats:
        raise ValueError("nested commutator needs at least one matrix")
    acc = mats[-1]
    for X in reversed(mats[:-1]):
        acc = commutator(X, acc)
    return acc


def dynkin_bracket(pair: SplitPair, word: DynkinWord) -> HessenbergMatrix:
    """[B_-^(u_1), B_+^(v_1), ..., B_-^(u_j), B_+^(v_j)] for word (u_1, v_1, ...)."""
    letters = word_letters(word)
    return nested_commutator([pair.minus if c == 0 else pair.plus for c in letters])
