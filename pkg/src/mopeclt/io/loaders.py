"""
JSON configuration models and loaders.

A run config names one classical family, a lattice path, a polynomial test
function and the sizes to sweep. Every section is a Pydantic V2 model so
malformed input is rejected with field-level diagnostics before any
computation starts.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    field_validator,
    model_validator,
)

from .. import constants
from ..enums import FamilyId, PathKind
from ..exceptions import ConfigError

logger = logging.getLogger(__name__)

RealVector = Tuple[float, ...]


def _require_distinct(name: str, values: RealVector) -> None:
    if len(set(values)) != len(values):
        raise ValueError(f"{name} values must be pairwise distinct, got {list(values)}")


class FamilyParams(BaseModel):
    """Per-family parameters.

    Only the keys relevant to the chosen family are read:
    - hermite: a
    - laguerre2: alpha, sigma, alpha_hat
    - charlier: lambda, tau (scaled) or t (unscaled), gamma, scaled
    - krawtchouk: tau (scaled) or t (unscaled), p, scaled, base_ratio
    """
    model_config = ConfigDict(extra='ignore', frozen=True, populate_by_name=True)

    a: Optional[RealVector] = Field(default=None, description="Hermite source values a_j")
    alpha: float = Field(default=0.0, ge=0, description="Laguerre exponent alpha")
    alpha_hat: Optional[float] = Field(
        default=None,
        ge=0,
        description="When set, alpha = alpha_hat * n_scale (Laguerre only)"
    )
    sigma: Optional[RealVector] = Field(default=None, description="Laguerre rates sigma_j")
    lam: Optional[float] = Field(
        default=None, gt=0, alias="lambda", description="Charlier intensity lambda"
    )
    tau: Optional[float] = Field(default=None, gt=0, description="Scaled time, t = n*tau")
    t: Optional[float] = Field(default=None, ge=0, description="Unscaled time")
    gamma: Optional[RealVector] = Field(default=None, description="Charlier speeds gamma_j")
    p: Optional[RealVector] = Field(default=None, description="Krawtchouk probabilities p_j")
    scaled: bool = Field(default=True, description="Scaled (CLT) or unscaled (oracle) mode")
    base_ratio: float = Field(
        default=1.0, gt=0, description="Krawtchouk base measure ratio r in r^x/(x!(N-x)!)"
    )


class FamilySpec(BaseModel):
    """One classical family with its scaling parameter n.

    JSON form: {"family": "hermite", "m": 2, "params": {...}, "n_scale": 100}
    """
    model_config = ConfigDict(extra='ignore', frozen=True)

    family: FamilyId
    m: int = Field(..., ge=1, description="Number of weights")
    params: FamilyParams = Field(default_factory=FamilyParams)
    n_scale: int = Field(default=1, ge=1, description="Ensemble size in the varying scaling")

    @field_validator('family', mode='before')
    @classmethod
    def coerce_family(cls, v):
        if isinstance(v, str):
            return FamilyId(v.lower())
        return v

    @model_validator(mode='after')
    def validate_family_params(self):
        p = self.params
        m = self.m
        if self.family == FamilyId.HERMITE:
            if p.a is None or len(p.a) != m:
                raise ValueError(f"hermite needs {m} source values 'a'")
            _require_distinct("a", p.a)
        elif self.family == FamilyId.LAGUERRE2:
            if p.sigma is None or len(p.sigma) != m:
                raise ValueError(f"laguerre2 needs {m} rates 'sigma'")
            if any(s <= 0 for s in p.sigma):
                raise ValueError(f"sigma must be positive, got {list(p.sigma)}")
            _require_distinct("sigma", p.sigma)
        elif self.family == FamilyId.CHARLIER:
            if p.lam is None:
                raise ValueError("charlier needs 'lambda' > 0")
            if p.gamma is None or len(p.gamma) != m:
                raise ValueError(f"charlier needs {m} speeds 'gamma'")
            if any(not 0 < g <= 1 for g in p.gamma):
                raise ValueError(f"gamma must lie in (0, 1], got {list(p.gamma)}")
            _require_distinct("gamma", p.gamma)
            self._check_time(p)
        elif self.family == FamilyId.KRAWTCHOUK:
            if p.p is None or len(p.p) != m:
                raise ValueError(f"krawtchouk needs {m} probabilities 'p'")
            if any(not 0 < q < 1 for q in p.p):
                raise ValueError(f"p must lie in (0, 1), got {list(p.p)}")
            _require_distinct("p", p.p)
            self._check_time(p)
            if not p.scaled and p.t is not None and float(p.t) != int(p.t):
                raise ValueError(f"unscaled krawtchouk needs an integer t, got {p.t}")
        return self

    def _check_time(self, p: FamilyParams) -> None:
        if p.scaled and p.tau is None:
            raise ValueError(f"scaled {self.family.value} needs 'tau' > 0")
        if not p.scaled and p.t is None:
            raise ValueError(f"unscaled {self.family.value} needs 't'")

    def with_n_scale(self, n: int) -> "FamilySpec":
        """Copy of this spec with a different ensemble size."""
        if n < 1:
            raise ValueError(f"n_scale must be >= 1, got {n}")
        return self.model_copy(update={"n_scale": int(n)})


class PathSpec(BaseModel):
    """Lattice path description.

    JSON form: {"kind": "ray", "m": 2, "nu": [0.5, 0.5]} or
    {"kind": "explicit", "m": 2, "nu": [0.5, 0.5], "steps": [1, 2, 1, 2]}
    (steps are 1-based).
    """
    model_config = ConfigDict(extra='ignore', frozen=True)

    kind: PathKind = PathKind.STEP_LINE
    m: int = Field(..., ge=1)
    nu: Optional[RealVector] = None
    steps: Optional[Tuple[int, ...]] = None

    @field_validator('kind', mode='before')
    @classmethod
    def coerce_kind(cls, v):
        if isinstance(v, str):
            return PathKind(v.lower())
        return v

    @model_validator(mode='after')
    def validate_path_fields(self):
        if self.kind == PathKind.RAY and (self.nu is None or len(self.nu) != self.m):
            raise ValueError(f"ray path needs a direction 'nu' of length {self.m}")
        if self.kind == PathKind.EXPLICIT:
            if self.steps is None:
                raise ValueError("explicit path needs 'steps'")
            if any(not 1 <= s <= self.m for s in self.steps):
                raise ValueError(f"steps must lie in 1..{self.m}")
        if self.kind == PathKind.HERMITE_EXAMPLE and self.m != 2:
            raise ValueError("hermite_example path is defined for m = 2 only")
        return self


class Tolerances(BaseModel):
    """Tolerance overrides; defaults follow mopeclt.constants."""
    model_config = ConfigDict(extra='ignore', frozen=True)

    aliasing_rtol: float = Field(default=constants.ALIASING_RTOL, gt=0)
    tail_rtol: float = Field(default=constants.TAIL_RTOL, gt=0)
    structural_zero_rtol: float = Field(default=constants.STRUCTURAL_ZERO_RTOL, gt=0)
    conjugation_rtol: float = Field(default=constants.CONJUGATION_RTOL, gt=0)
    variance_chain_rtol: float = Field(default=constants.VARIANCE_CHAIN_RTOL, gt=0)
    vanishing_rtol: float = Field(default=constants.VANISHING_RTOL, gt=0)
    bch_rtol: float = Field(default=constants.BCH_RTOL, gt=0)
    right_limit_exact_atol: float = Field(default=constants.RIGHT_LIMIT_EXACT_ATOL, gt=0)
    right_limit_max_ratio: float = Field(default=constants.RIGHT_LIMIT_MAX_RATIO, gt=0)
    oracle_atol: float = Field(default=constants.ORACLE_ATOL, gt=0)
    recurrence_atol: float = Field(default=constants.RECURRENCE_ATOL, gt=0)
    laurent_agreement_rtol: float = Field(default=constants.LAURENT_AGREEMENT_RTOL, gt=0)


class OutputSpec(BaseModel):
    """Output file names, relative to --out."""
    model_config = ConfigDict(extra='ignore', frozen=True)

    laurent_csv: str = "laurent.csv"
    variance_json: str = "variance.json"
    converge_csv: str = "converge.csv"
    right_limit_csv: str = "right_limit.csv"
    verify_json: str = "verify.json"
    matrix_csv: str = "matrix.csv"
    oracle_json: str = "oracle.json"


class RunConfig(BaseModel):
    """Complete run configuration for the CLI."""
    model_config = ConfigDict(extra='ignore', frozen=True)

    family: FamilySpec
    path: Optional[PathSpec] = None
    f: Tuple[float, ...] = Field(default=(0.0, 1.0), description="Coefficients c_0..c_d of f")
    n_values: Tuple[int, ...] = Field(default=(50, 100, 200))
    m_max: int = Field(default=4, ge=1, le=8)
    nu: Optional[RealVector] = Field(
        default=None, description="Limit direction; defaults to the path direction"
    )
    tolerances: Tolerances = Field(default_factory=Tolerances)
    outputs: OutputSpec = Field(default_factory=OutputSpec)

    @field_validator('n_values')
    @classmethod
    def check_sweep(cls, v):
        if not v:
            raise ValueError("n_values must not be empty")
        if any(n < 1 for n in v):
            raise ValueError("n_values must be positive")
        if any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError(f"n_values must be strictly increasing, got {list(v)}")
        return v

    @model_validator(mode='after')
    def check_dimensions(self):
        if self.path is not None and self.path.m != self.family.m:
            raise ValueError(
                f"path dimension {self.path.m} differs from family m={self.family.m}"
            )
        if self.nu is not None and len(self.nu) != self.family.m:
            raise ValueError(f"nu must have length {self.family.m}")
        if len(self.f) == 0:
            raise ValueError("f needs at least one coefficient")
        return self

    def path_spec(self) -> PathSpec:
        """Path section, defaulting to the step-line path."""
        if self.path is not None:
            return self.path
        return PathSpec(kind=PathKind.STEP_LINE, m=self.family.m)


def _format_validation_error(err: ValidationError) -> str:
    lines = []
    for item in err.errors():
        location = ".".join(str(part) for part in item.get("loc", ())) or "<root>"
        lines.append(f"  {location}: {item.get('msg', 'invalid value')}")
    return "\n".join(lines)


def parse_run_config(data: Dict[str, Any], source: str = "<config>") -> RunConfig:
    """Validate an already-decoded config mapping.

    Raises:
        ConfigError: With one line per offending field
    """
    try:
        return RunConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError(f"Invalid run config {source}:\n{_format_validation_error(e)}") from e


def load_run_config(filepath: Union[str, Path]) -> RunConfig:
    """
    Load a run configuration from a JSON file.

    Args:
        filepath: Path to JSON config

    Returns:
        Validated RunConfig

    Raises:
        FileNotFoundError: If file doesn't exist
        ConfigError: If the JSON is malformed or a field fails validation
    """
    filepath = Path(filepath)

    if not filepath.exists():
        raise FileNotFoundError(f"Config file not found: {filepath}")

    try:
        with open(filepath, 'r') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigError(
            f"Malformed JSON in {filepath} at line {e.lineno}, column {e.colno}: {e.msg}"
        ) from e

    if not isinstance(data, dict):
        raise ConfigError(f"Config {filepath} must contain a JSON object")

    config = parse_run_config(data, source=str(filepath))
    logger.debug(f"Loaded {config.family.family.value} config from {filepath}")
    return config


def load_family_spec(data: Union[Dict[str, Any], str, Path]) -> FamilySpec:
    """Parse a FamilySpec from a mapping or a JSON file."""
    if not isinstance(data, dict):
        path = Path(data)
        if not path.exists():
            raise FileNotFoundError(f"Family file not found: {path}")
        with open(path, 'r') as f:
            data = json.load(f)
    try:
        return FamilySpec.model_validate(data)
    except ValidationError as e:
        raise ConfigError(f"Invalid family spec:\n{_format_validation_error(e)}") from e


def family_spec_to_dict(spec: FamilySpec) -> Dict[str, Any]:
    """JSON-ready dict of a FamilySpec (enum values, 'lambda' key)."""
    data = spec.model_dump(mode='json', by_alias=True, exclude_none=True)
    return data


def config_to_dict(config: RunConfig) -> Dict[str, Any]:
    """JSON-ready dict of a RunConfig."""
    return config.model_dump(mode='json', by_alias=True, exclude_none=True)
