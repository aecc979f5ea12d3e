"""
Numerical constants for mopeclt computations.

This module centralizes the tolerances, default sizes and limits used by the
engine, the verification suites and the CLI. Every tolerance listed here can
be overridden per run through the ``tolerances`` section of a run config.

MODIFICATION GUIDELINES:
- Add new constants here rather than hardcoding in functions
- Relative tolerances are suffixed _RTOL, absolute ones _ATOL
- Keep the verification tolerances in step with the test suite

Constants are grouped by category:
- Structural zeros and matrix bookkeeping
- Laurent extraction
- Cumulants and determinants
- Oracle limits
- Verification defaults
- CLI
"""

from typing import Tuple

# =============================================================================
# Structural Zeros
# =============================================================================

# Entry counted as zero when below this fraction of its cancellation scale
STRUCTURAL_ZERO_RTOL: float = 1e-12

# Absolute floor for structural-zero tests on matrices whose scale is 0
STRUCTURAL_ZERO_ATOL: float = 1e-300

# Limiting poles closer than this (relative to their magnitude) are confluent
POLE_SEPARATION_RTOL: float = 1e-12

# =============================================================================
# Laurent Extraction
# =============================================================================

# Default window depth L = DEPTH_PER_DEGREE * deg f + DEPTH_OFFSET
LAURENT_DEPTH_PER_DEGREE: int = 8
LAURENT_DEPTH_OFFSET: int = 40

# Default radius R = RADIUS_FACTOR * (1 + max|b_j| + sum|a_j|)
LAURENT_RADIUS_FACTOR: float = 2.0

# Quadrature node count N >= NODES_FACTOR * (deg f + L), rounded up to 2^k
QUADRATURE_NODES_FACTOR: int = 4
QUADRATURE_MAX_NODES: int = 2 ** 18

# Doubling-N aliasing certification
ALIASING_RTOL: float = 1e-12

# Safety factor in the per-coefficient FFT roundoff bound eps*log2(N)*max|F|*R^-l
QUADRATURE_NOISE_FACTOR: float = 4.0

# Quadrature windows stop at the depth where the roundoff bound exceeds this
# fraction of the largest core coefficient
QUADRATURE_RESOLVED_RTOL: float = 1e-8

# Tail certification |r_{-L}| <= TAIL_RTOL * max|r|
TAIL_RTOL: float = 1e-14

# Widening of series windows stops at this depth
LAURENT_MAX_DEPTH: int = 4096

# Relative decay below which a series tail counts as decaying
TAIL_DECAY_RATIO: float = 0.999

# =============================================================================
# Cumulants and Determinants
# =============================================================================

# exp_r order used for MGF determinants is m_max + MGF_ORDER_MARGIN
MGF_ORDER_MARGIN: int = 2

# Five-point stencil step for the divided-difference cross-check
STENCIL_STEP: float = 1e-3

# Default number of worker threads (overridden by MOPE_THREADS)
DEFAULT_THREADS: int = 1

# =============================================================================
# Oracle Limits
# =============================================================================

# Exact rational arithmetic is used up to this support size
EXACT_SUPPORT_LIMIT: int = 12

# A float parameter counts as rational when a fraction with at most this
# denominator rounds back to it
RATIONAL_MAX_DENOMINATOR: int = 10 ** 6

# Maximum number of configurations enumerated exactly
ENUMERATION_LIMIT: int = 10 ** 6

# Configuration probabilities above -NEGATIVE_PROBABILITY_ATOL count as >= 0
NEGATIVE_PROBABILITY_ATOL: float = 1e-12

# Charlier base measure: discarded tail mass relative to retained mass
CHARLIER_TAIL_RTOL: float = 1e-16

# Residual certification of floating-point moment solves
MOMENT_RESIDUAL_RTOL: float = 1e-10

# =============================================================================
# Verification Defaults
# =============================================================================

CONJUGATION_RTOL: float = 1e-9
VARIANCE_CHAIN_RTOL: float = 1e-9
VANISHING_RTOL: float = 1e-9
BCH_RTOL: float = 1e-10
RIGHT_LIMIT_EXACT_ATOL: float = 1e-12
RIGHT_LIMIT_MAX_RATIO: float = 0.7
ORACLE_ATOL: float = 1e-9
RECURRENCE_ATOL: float = 1e-9
LAURENT_AGREEMENT_RTOL: float = 1e-10

# Sweep used by the variance and bch suites
VERIFY_DEGREES: Tuple[int, ...] = (1, 2, 3)
VERIFY_SIZES: Tuple[int, ...] = (20, 60)
VERIFY_VANISHING_SIZE: int = 60
VERIFY_BCH_SIZE: int = 40
VERIFY_RIGHT_LIMIT_SIZES: Tuple[int, ...] = (100, 200, 400)
VERIFY_RIGHT_LIMIT_WINDOW: int = 4
VERIFY_CONJUGATION_CASES: int = 20
VERIFY_CONJUGATION_MAX_SIZE: int = 60
VERIFY_PARTITION_MAX_ORDER: int = 12
VERIFY_SEED: int = 20240611

# =============================================================================
# CLI
# =============================================================================

EXIT_OK: int = 0
EXIT_CHECK_FAILED: int = 1
EXIT_USAGE: int = 2

THREADS_ENV_VAR: str = "MOPE_THREADS"

# Significant digits for floats in CSV/JSON outputs (repr-stable)
OUTPUT_FLOAT_DIGITS: int = 17
