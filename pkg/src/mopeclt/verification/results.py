"""
Structured outcomes of verification checks.

A check never raises on failure: it records a CheckMessage with the
measured value, the tolerance it was held to and the margin between them,
so one failing identity does not hide the others in a suite.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional


class Severity(Enum):
    """Check message severity"""
    INFO = "info"
    WARNING = "warning"
    ERROR = "error"


@dataclass
class CheckMessage:
    """A single check finding"""
    severity: Severity
    code: str
    message: str
    value: Optional[float] = None
    tolerance: Optional[float] = None
    suggestion: Optional[str] = None

    @property
    def margin(self) -> Optional[float]:
        """tolerance - value; negative when the check failed."""
        if self.value is None or self.tolerance is None:
            return None
        return self.tolerance - self.value

    def to_dict(self) -> Dict[str, Any]:
        return {
            "severity": self.severity.value,
            "code": self.code,
            "message": self.message,
            "value": self.value,
            "tolerance": self.tolerance,
            "margin": self.margin,
            "suggestion": self.suggestion,
        }


@dataclass
class SuiteResult:
    """Complete outcome of one suite"""
    name: str
    passed: bool  # True if no errors
    messages: List[CheckMessage] = field(default_factory=list)

    @property
    def errors(self) -> List[CheckMessage]:
        return [m for m in self.messages if m.severity == Severity.ERROR]

    @property
    def warnings(self) -> List[CheckMessage]:
        return [m for m in self.messages if m.severity == Severity.WARNING]

    @property
    def infos(self) -> List[CheckMessage]:
        return [m for m in self.messages if m.severity == Severity.INFO]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checks": len(self.messages),
            "failures": len(self.errors),
            "messages": [m.to_dict() for m in self.messages],
        }


def within(code: str, value: float, tolerance: float, message: str,
           suggestion: Optional[str] = None) -> CheckMessage:
    """INFO when value <= tolerance, ERROR otherwise (also for NaN)."""
    ok = math.isfinite(value) and value <= tolerance
    return CheckMessage(
        severity=Severity.INFO if ok else Severity.ERROR,
        code=code,
        message=message,
        value=float(value),
        tolerance=float(tolerance),
        suggestion=None if ok else suggestion,
    )


def failure(code: str, message: str, suggestion: Optional[str] = None) -> CheckMessage:
    """ERROR for a check that could not be evaluated."""
    return CheckMessage(Severity.ERROR, code, message, suggestion=suggestion)


def finish(name: str, messages: List[CheckMessage]) -> SuiteResult:
    has_errors = any(m.severity == Severity.ERROR for m in messages)
    return SuiteResult(name=name, passed=not has_errors, messages=messages)
