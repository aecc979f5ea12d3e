"""
Base measures of the classical families.

Discrete families (Charlier, Krawtchouk) carry their masses on a finite
support; Charlier is truncated where the Poisson tail becomes negligible.
Continuous families (Hermite, Laguerre II) expose a pointwise density used
for diagnostics only.
"""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..exceptions import ParameterDomainError


@dataclass(frozen=True)
class DiscreteMeasure:
    """
    Finite positive measure sum_i masses[i] * delta(support[i]).

    Attributes:
        support: Strictly increasing support points
        masses: Positive masses, same length as support
        truncated: True when the support was cut from an infinite one
        tail_bound: Bound on the discarded mass relative to the retained mass
    """
    support: NDArray[np.float64]
    masses: NDArray[np.float64]
    truncated: bool = False
    tail_bound: float = 0.0

    def __post_init__(self) -> None:
        support = np.asarray(self.support, dtype=float)
        masses = np.asarray(self.masses, dtype=float)
        if support.ndim != 1 or support.shape != masses.shape:
            raise ParameterDomainError(
                f"support and masses must be 1-d of equal length, got {support.shape} "
                f"and {masses.shape}"
            )
        if support.size and np.any(np.diff(support) <= 0):
            raise ParameterDomainError("support must be strictly increasing")
        if np.any(masses <= 0):
            raise ParameterDomainError("masses must be positive")
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "masses", masses)

    def __len__(self) -> int:
        return int(self.support.size)

    @property
    def total_mass(self) -> float:
        return float(self.masses.sum())

    def contains(self, x: float) -> bool:
        return bool(np.any(self.support == x))

    def weighted(self, weight: Callable[[NDArray[np.float64]], NDArray[np.float64]]
                 ) -> "DiscreteMeasure":
        """The measure w(x) dmu(x) for a positive weight w."""
        return DiscreteMeasure(
            support=self.support,
            masses=self.masses * np.asarray(weight(self.support), dtype=float),
            truncated=self.truncated,
            tail_bound=self.tail_bound,
        )

    def integrate(self, values: ArrayLike) -> float:
        """Sum of values(x_i) * mass_i for values sampled on the support."""
        return float(np.dot(np.asarray(values, dtype=float), self.masses))


@dataclass(frozen=True)
class ContinuousDensity:
    """
    Density of an absolutely continuous base measure on [lower, upper].

    Attributes:
        lower: Left end of the support (may be -inf)
        upper: Right end of the support (may be +inf)
        density: Pointwise density of the base measure
        description: Human-readable form for reports
    """
    lower: float
    upper: float
    density: Callable[[NDArray[np.float64]], NDArray[np.float64]]
    description: str = ""

    def contains(self, x: float) -> bool:
        return bool(self.lower <= x <= self.upper)

    def __call__(self, x: ArrayLike) -> NDArray[np.float64]:
        values = np.asarray(x, dtype=float)
        if np.any((values < self.lower) | (values > self.upper)):
            raise ParameterDomainError(
                f"point outside support [{self.lower}, {self.upper}]: {x}"
            )
        return np.asarray(self.density(values), dtype=float)


def lebesgue(description: str = "dx") -> ContinuousDensity:
    """Lebesgue measure on the real line."""
    return ContinuousDensity(-np.inf, np.inf, lambda x: np.ones_like(x), description)


def half_line(description: str = "dx on [0, inf)") -> ContinuousDensity:
    """Lebesgue measure on [0, inf)."""
    return ContinuousDensity(0.0, np.inf, lambda x: np.ones_like(x), description)


def check_lattice_point(x: float, upper: Optional[int] = None) -> int:
    """Validate that x is a non-negative integer (at most upper)."""
    if not float(x).is_integer() or x < 0:
        raise ParameterDomainError(f"point {x} is not a non-negative integer")
    if upper is not None and x > upper:
        raise ParameterDomainError(f"point {x} is beyond the support end {upper}")
    return int(x)
