"""Verification suites for the exact finite-n identities."""

from .results import CheckMessage, Severity, SuiteResult
from .suites import SUITES, run_suite

__all__ = ["CheckMessage", "Severity", "SuiteResult", "SUITES", "run_suite"]
