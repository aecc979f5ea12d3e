"""Type-safe enums shared by the configuration layer and the engine."""

from enum import Enum


class FamilyId(Enum):
    """Classical multiple orthogonal polynomial family"""
    HERMITE = "hermite"  # Gaussian weights with external source values a_j
    LAGUERRE2 = "laguerre2"  # x^alpha exp(-n sigma_j x), complex Wishart
    CHARLIER = "charlier"  # gamma_j^x against a Poisson base measure
    KRAWTCHOUK = "krawtchouk"  # (p_j/(1-p_j))^x against a binomial-type base measure


class PathKind(Enum):
    """How a lattice path is generated from its config"""
    STEP_LINE = "step_line"  # Cyclic increments, nu = (1/m, ..., 1/m)
    RAY = "ray"  # Greedy path towards a prescribed direction nu
    HERMITE_EXAMPLE = "hermite_example"  # k_j = (floor((j+1)/2), floor(j/2))
    EXPLICIT = "explicit"  # Steps given verbatim (1-based)


class MatrixKind(Enum):
    """Matrices the CLI can build and dump"""
    J = "J"  # Recurrence matrix of the family along the path
    TC = "Tc"  # Limiting matrix T_c in the pi basis
    T_COMPOSED = "T_composed"  # T_{f o c} in the pi basis
    F_OF_J = "f_J"  # f applied to the recurrence matrix
    TOEPLITZ = "toeplitz"  # Toeplitz matrix of the Laurent window of f o c


class LaurentMethod(Enum):
    """Extraction route for Laurent coefficients of f o c"""
    QUADRATURE = "quadrature"  # Trapezoidal rule on |z| = R via FFT
    SERIES = "series"  # Truncated power series in 1/z


class SuiteName(Enum):
    """Verification suites runnable from the CLI"""
    IDENTITIES = "identities"
    CONJUGATION = "conjugation"
    VARIANCE = "variance"
    BCH = "bch"
    RIGHT_LIMIT = "right-limit"
    RECURRENCE = "recurrence"
    ORACLE = "oracle"
    ALL = "all"
