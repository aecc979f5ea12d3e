"""
Admissible up-right lattice paths k_0, k_1, ... in Z_+^m.

A path is stored as its step sequence j_0, j_1, ... (0-based internally,
1-based when serialized) with k_{n+1} = k_n + e_{j_n}, so |k_n| = n holds
by construction. The direction nu is the limit of k_n / n.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..enums import PathKind
from ..exceptions import PathError
from ..io.loaders import PathSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LatticePath:
    """
    Up-right path with unit steps.

    Attributes:
        m: Dimension
        steps: 0-based step directions j_0, j_1, ...
        nu: Target direction (sums to 1)
    """
    m: int
    steps: NDArray[np.int64]
    nu: NDArray[np.float64]
    _indices: NDArray[np.int64] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        steps = np.asarray(self.steps, dtype=np.int64).reshape(-1)
        nu = np.asarray(self.nu, dtype=float).reshape(-1)
        if self.m < 1:
            raise PathError(f"dimension must be >= 1, got {self.m}")
        if steps.size and (steps.min() < 0 or steps.max() >= self.m):
            raise PathError(f"steps must lie in 0..{self.m - 1}")
        if nu.shape != (self.m,):
            raise PathError(f"nu must have {self.m} entries, got {nu.shape}")
        increments = np.zeros((steps.size + 1, self.m), dtype=np.int64)
        if steps.size:
            increments[np.arange(1, steps.size + 1), steps] = 1
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "_indices", np.cumsum(increments, axis=0))

    def __len__(self) -> int:
        """Number of steps; multi-indices k_0..k_len exist."""
        return int(self.steps.size)

    @property
    def length(self) -> int:
        return int(self.steps.size)

    @property
    def multi_indices(self) -> NDArray[np.int64]:
        """Array of shape (length + 1, m) holding k_0..k_length."""
        return self._indices

    def k(self, n: int) -> NDArray[np.int64]:
        if not 0 <= n <= self.length:
            raise PathError(f"index {n} outside path of length {self.length}")
        return self._indices[n]

    def prefix(self, length: int) -> "LatticePath":
        if length > self.length:
            raise PathError(f"prefix of length {length} exceeds path length {self.length}")
        return LatticePath(self.m, self.steps[:length], self.nu)

    def require(self, length: int) -> None:
        """Raise PathError unless the path has at least length steps."""
        if self.length < length:
            raise PathError(f"path of length {self.length} is too short; need {length} steps")

    def to_dict(self) -> Dict[str, Any]:
        """JSON form with 1-based steps."""
        return {
            "m": self.m,
            "nu": [float(v) for v in self.nu],
            "steps": [int(s) + 1 for s in self.steps],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "LatticePath":
        return cls(
            m=int(data["m"]),
            steps=np.asarray(data["steps"], dtype=np.int64) - 1,
            nu=np.asarray(data["nu"], dtype=float),
        )


def step_line(m: int, length: int) -> LatticePath:
    """Cyclic path with j_n = n mod m and nu = (1/m, ..., 1/m)."""
    if m < 1 or length < 0:
        raise PathError(f"need m >= 1 and length >= 0, got m={m}, length={length}")
    return LatticePath(m, np.arange(length) % m, np.full(m, 1.0 / m))


def ray_path(nu: ArrayLike, length: int) -> LatticePath:
    """
    Greedy path towards nu.

    j_n = argmax_j ((n+1) nu_j - k_{n,j}), ties to the smallest j, which
    keeps |k_{n,j} - n nu_j| <= m for every n.
    """
    nu = np.asarray(nu, dtype=float)
    if nu.ndim != 1 or nu.size == 0:
        raise PathError(f"nu must be a non-empty vector, got {nu}")
    if np.any(nu < 0) or abs(float(nu.sum()) - 1.0) > 1e-12:
        raise PathError(f"nu must be a probability vector, got {nu.tolist()}")
    if length < 0:
        raise PathError(f"length must be >= 0, got {length}")
    m = nu.size
    k = np.zeros(m)
    steps = np.empty(length, dtype=np.int64)
    for n in range(length):
        j = int(np.argmax((n + 1) * nu - k))
        steps[n] = j
        k[j] += 1
    return LatticePath(m, steps, nu)


def hermite_example_path(length: int) -> LatticePath:
    """Path k_j = (floor((j+1)/2), floor(j/2)) in two dimensions."""
    if length < 0:
        raise PathError(f"length must be >= 0, got {length}")
    return LatticePath(2, np.arange(length) % 2, np.array([0.5, 0.5]))


def explicit_path(m: int, steps_one_based: Sequence[int],
                  nu: Optional[ArrayLike] = None) -> LatticePath:
    """Path from 1-based steps; nu defaults to the empirical direction."""
    steps = np.asarray(steps_one_based, dtype=np.int64) - 1
    if nu is None:
        counts = np.bincount(steps, minlength=m).astype(float)
        nu = counts / max(counts.sum(), 1.0) if steps.size else np.full(m, 1.0 / m)
    return LatticePath(m, steps, np.asarray(nu, dtype=float))


def path_from_spec(spec: PathSpec, length: int) -> LatticePath:
    """Generate a path of the given length from its config section."""
    if spec.kind == PathKind.STEP_LINE:
        return step_line(spec.m, length)
    if spec.kind == PathKind.RAY:
        return ray_path(spec.nu, length)
    if spec.kind == PathKind.HERMITE_EXAMPLE:
        return hermite_example_path(length)
    path = explicit_path(spec.m, spec.steps, spec.nu)
    path.require(length)
    return path.prefix(length)


def validate_path(path: LatticePath, tolerance: Optional[float] = None) -> None:
    """
    Check the admissibility clauses on the generated horizon.

    - unit up-right steps
    - |k_n| = n
    - |k_{N,j}/N - nu_j| <= m/N at the final index N (or the given tolerance)

    Raises:
        PathError: Naming the first violated clause
    """
    K = path.multi_indices
    if np.any(np.diff(K, axis=0) < 0) or np.any(np.abs(np.diff(K, axis=0)).sum(axis=1) != 1):
        raise PathError("path steps must be unit up-right steps")
    if np.any(K.sum(axis=1) != np.arange(K.shape[0])):
        raise PathError("|k_n| = n fails")
    if abs(float(path.nu.sum()) - 1.0) > 1e-12 or np.any(path.nu < 0):
        raise PathError(f"nu must be a probability vector, got {path.nu.tolist()}")
    N = path.length
    if N == 0:
        return
    bound = path.m / N if tolerance is None else tolerance
    gap = float(np.max(np.abs(K[-1] / N - path.nu)))
    if gap > bound:
        raise PathError(f"k_N/N misses nu by {gap:.3e} > {bound:.3e} at N={N}")


def max_deviation(path: LatticePath) -> float:
    """max_n max_j |k_{n,j} - n nu_j|."""
    K = path.multi_indices
    n = np.arange(K.shape[0])[:, None]
    return float(np.max(np.abs(K - n * path.nu[None, :])))
