"""
Tests for check messages and the verification suites.
"""

import math

import pytest

from mopeclt.enums import SuiteName
from mopeclt.io.loaders import FamilySpec, Tolerances
from mopeclt.verification import SUITES, Severity, run_suite
from mopeclt.verification.results import CheckMessage, failure, finish, within
from mopeclt.verification.suites import oracle_family


class TestCheckMessages:
    """Tests for CheckMessage and SuiteResult helpers."""

    def test_within_passes(self):
        msg = within("X", 1e-12, 1e-9, "small")
        assert msg.severity == Severity.INFO
        assert msg.margin == pytest.approx(1e-9 - 1e-12)
        assert msg.suggestion is None

    def test_within_fails(self):
        msg = within("X", 1e-3, 1e-9, "large", suggestion="widen the window")
        assert msg.severity == Severity.ERROR
        assert msg.margin < 0
        assert msg.suggestion == "widen the window"

    def test_nan_fails(self):
        assert within("X", math.nan, 1.0, "nan").severity == Severity.ERROR

    def test_failure_has_no_margin(self):
        msg = failure("EVAL", "could not evaluate")
        assert msg.severity == Severity.ERROR
        assert msg.margin is None

    def test_finish(self):
        """Test that warnings do not fail a suite but errors do."""
        warn = CheckMessage(Severity.WARNING, "W", "just a warning")
        ok = within("A", 0.0, 1.0, "ok")
        assert finish("s", [ok, warn]).passed
        result = finish("s", [ok, warn, failure("E", "broken")])
        assert not result.passed
        assert len(result.errors) == 1
        assert len(result.warnings) == 1
        assert len(result.infos) == 1

    def test_to_dict(self):
        result = finish("variance", [within("A", 0.5, 1.0, "ok")])
        data = result.to_dict()
        assert data["suite"] == "variance"
        assert data["passed"] is True
        assert data["checks"] == 1
        assert data["failures"] == 0
        assert data["messages"][0]["severity"] == "info"
        assert data["messages"][0]["margin"] == 0.5


class TestRunSuite:
    """Tests for suite dispatch."""

    def test_every_suite_registered(self):
        assert set(SUITES) == set(SuiteName) - {SuiteName.ALL}

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("everything")

    def test_failures_are_returned(self, monkeypatch):
        """Test that a failing suite is reported rather than raised."""
        monkeypatch.setitem(SUITES, SuiteName.IDENTITIES,
                            lambda tol: finish("identities", [failure("E", "broken")]))
        (result,) = run_suite(SuiteName.IDENTITIES)
        assert not result.passed
        assert result.errors[0].code == "E"

    def test_tolerances_reach_the_suite(self, monkeypatch):
        seen = []
        monkeypatch.setitem(SUITES, SuiteName.IDENTITIES,
                            lambda tol: seen.append(tol) or finish("identities", []))
        run_suite("identities", Tolerances(oracle_atol=1e-6))
        assert seen[0].oracle_atol == 1e-6


class TestSuitesPass:
    """Every suite passes at the default tolerances."""

    def test_oracle_family(self):
        spec = oracle_family()
        assert isinstance(spec, FamilySpec)
        assert spec.family.value == "krawtchouk"

    def test_oracle_reports_rational_enumeration(self):
        (result,) = run_suite("oracle")
        normalization = [m for m in result.messages if m.code == "ENSEMBLE_NORMALIZATION"]
        assert normalization
        assert all("rational enumeration" in m.message for m in normalization)
        assert all(m.value == 0.0 for m in normalization)

    @pytest.mark.parametrize("name", ["identities", "conjugation", "recurrence", "oracle"])
    def test_fast_suites(self, name):
        (result,) = run_suite(name)
        assert result.messages
        assert result.passed, [m.message for m in result.errors]

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["variance", "bch", "right-limit"])
    def test_slow_suites(self, name):
        (result,) = run_suite(name)
        assert result.messages
        assert result.passed, [m.message for m in result.errors]

    @pytest.mark.slow
    def test_all(self):
        results = run_suite("all")
        assert [r.name for r in results] == [s.value for s in SUITES]
        assert all(r.passed for r in results)
