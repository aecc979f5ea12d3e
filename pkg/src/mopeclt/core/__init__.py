"""
mopeclt core - families, symbols, banded matrices and cumulants.

Pure numerical engine with no file or CLI concerns.
"""

from .banded import HessenbergMatrix, SplitPair, split
from .cumulants import (
    CumulantReport,
    cumulant,
    cumulants_upto,
    linear_statistic_cumulants,
    mgf_determinant,
)
from .families import make_family, nevai_limits, nn_coeffs, weighted_measures
from .lattice_path import LatticePath, explicit_path, ray_path, step_line
from .oracle import enumerate_mope, exact_cumulants
from .recurrence import build_J, build_T_composed, build_Tc, toeplitz_matrix
from .symbol import (
    LaurentWindow,
    RationalSymbol,
    compose_laurent,
    compose_laurent_series,
    finite_n_variance,
    limiting_variance,
)

__all__ = [
    "HessenbergMatrix",
    "SplitPair",
    "split",
    "CumulantReport",
    "cumulant",
    "cumulants_upto",
    "linear_statistic_cumulants",
    "mgf_determinant",
    "make_family",
    "nevai_limits",
    "nn_coeffs",
    "weighted_measures",
    "LatticePath",
    "explicit_path",
    "ray_path",
    "step_line",
    "enumerate_mope",
    "exact_cumulants",
    "build_J",
    "build_T_composed",
    "build_Tc",
    "toeplitz_matrix",
    "LaurentWindow",
    "RationalSymbol",
    "compose_laurent",
    "compose_laurent_series",
    "finite_n_variance",
    "limiting_variance",
]
