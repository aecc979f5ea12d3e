"""
mopeclt IO - run configuration and report writers.

Example:
    >>> from mopeclt.io import load_run_config, save_json_report
    >>> config = load_run_config("run.json")
"""

from .loaders import (
    FamilySpec,
    PathSpec,
    RunConfig,
    Tolerances,
    load_run_config,
    parse_run_config,
)
from .writers import dump_matrix_window, save_json_report, write_csv

__all__ = [
    "FamilySpec",
    "PathSpec",
    "RunConfig",
    "Tolerances",
    "load_run_config",
    "parse_run_config",
    "dump_matrix_window",
    "save_json_report",
    "write_csv",
]
