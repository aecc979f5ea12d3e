"""
Exception hierarchy for mopeclt.

Every error raised on purpose by the library derives from MopeError so
callers (the CLI in particular) can separate domain failures from bugs.
Errors that describe a bad argument also derive from ValueError.
"""

from typing import Optional, Sequence


class MopeError(Exception):
    """Base class for all library errors."""


class ParameterDomainError(MopeError, ValueError):
    """Family parameters, evaluation points or directions outside their domain."""


class ConfluenceError(MopeError):
    """Two limiting poles b_j(nu) coincide; confluent symbols are unsupported."""


class UnsupportedFamilyError(MopeError):
    """Family whose a-coefficients do not vanish at k_j = 0."""


class PathError(MopeError, ValueError):
    """Lattice path is inadmissible or too short for the requested rows."""


class WindowExhaustedError(MopeError, IndexError):
    """An entry depends on rows beyond the exact window of a matrix."""

    def __init__(self, message: str, requested: Optional[int] = None,
                 available: Optional[int] = None):
        super().__init__(message)
        self.requested = requested
        self.available = available


class WindowTooNarrowError(MopeError):
    """Laurent window does not cover the offsets a Toeplitz matrix needs."""


class ContourError(MopeError):
    """Quadrature circle does not enclose every pole of the symbol."""


class UncertifiedWindowError(MopeError):
    """Laurent window failed aliasing or tail certification after widening."""


class HypothesisViolatedError(MopeError):
    """[B_-, B_+] does not have finitely many nonzero columns in the window."""


class NonNormalIndexError(MopeError):
    """The orthogonality system of a multi-index is singular."""

    def __init__(self, k: Sequence[int], detail: str = ""):
        self.k = tuple(int(v) for v in k)
        message = f"Multi-index {self.k} is not normal"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class InvalidEnsembleError(MopeError):
    """Ensemble density is negative on some configuration."""


class EnsembleTooLargeError(MopeError):
    """Exact enumeration would exceed the configuration limit."""


class ConfigError(MopeError, ValueError):
    """Run configuration could not be read or validated."""
