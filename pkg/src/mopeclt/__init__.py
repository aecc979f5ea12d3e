"""
mopeclt - Recurrence matrices and CLT certification for multiple orthogonal
polynomial ensembles.

Builds the nearest-neighbour recurrence matrix J of a classical multiple
orthogonal polynomial family along a lattice path, its rational limit symbol
c, the operators T_c and T_{f o c}, and evaluates the cumulants of linear
statistics as traces of projected matrix products.

Example:
    >>> from mopeclt import make_family, step_line, nevai_limits
    >>> from mopeclt import linear_statistic_cumulants, compose_laurent, limiting_variance
    >>>
    >>> spec = make_family("hermite", 2, a=(1.0, -1.0))
    >>> path = step_line(2, 200)
    >>> report = linear_statistic_cumulants(spec, path, (0.0, 1.0), n=100, m_max=4)
    >>>
    >>> symbol = nevai_limits(spec, (0.5, 0.5))
    >>> sigma2 = limiting_variance(compose_laurent((0.0, 1.0), symbol))

Note: All imports are lazy-loaded; importing mopeclt does not pull in
scipy, sympy or pydantic until a name that needs them is accessed.
"""

__version__ = "0.1.0"

_ENUMS = {"FamilyId", "PathKind", "MatrixKind", "LaurentMethod", "SuiteName"}

_EXCEPTIONS = {
    "MopeError",
    "ParameterDomainError",
    "ConfluenceError",
    "UnsupportedFamilyError",
    "PathError",
    "WindowExhaustedError",
    "WindowTooNarrowError",
    "ContourError",
    "UncertifiedWindowError",
    "HypothesisViolatedError",
    "NonNormalIndexError",
    "InvalidEnsembleError",
    "EnsembleTooLargeError",
    "ConfigError",
}

_IO = {
    "FamilySpec",
    "PathSpec",
    "Tolerances",
    "RunConfig",
    "load_run_config",
    "parse_run_config",
    "save_json_report",
    "write_csv",
}

_CORE = {
    "make_family",
    "nn_coeffs",
    "nevai_limits",
    "weighted_measures",
    "LatticePath",
    "step_line",
    "ray_path",
    "explicit_path",
    "RationalSymbol",
    "LaurentWindow",
    "compose_laurent",
    "compose_laurent_series",
    "limiting_variance",
    "finite_n_variance",
    "HessenbergMatrix",
    "build_J",
    "build_Tc",
    "build_T_composed",
    "toeplitz_matrix",
    "cumulant",
    "cumulants_upto",
    "linear_statistic_cumulants",
    "mgf_determinant",
    "CumulantReport",
    "enumerate_mope",
    "exact_cumulants",
}

_VERIFICATION = {"run_suite", "SuiteResult", "CheckMessage", "Severity"}

# Cache for lazy-loaded modules
_modules = {}


def _load(key):
    if key not in _modules:
        if key == "enums":
            from . import enums as module
        elif key == "exceptions":
            from . import exceptions as module
        elif key == "io":
            from . import io as module
        elif key == "core":
            from . import core as module
        else:
            from . import verification as module
        _modules[key] = module
    return _modules[key]


def __getattr__(name):
    """Lazy load submodules when their attributes are accessed."""
    for key, names in (("enums", _ENUMS), ("exceptions", _EXCEPTIONS), ("io", _IO),
                       ("core", _CORE), ("verification", _VERIFICATION)):
        if name in names:
            return getattr(_load(key), name)
    raise AttributeError(f"module 'mopeclt' has no attribute {name!r}")


__all__ = ["__version__", *sorted(_ENUMS | _EXCEPTIONS | _IO | _CORE | _VERIFICATION)]
