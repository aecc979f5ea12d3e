"""
Tests for the command-line interface.
"""

import csv
import json
import subprocess
import sys

import pytest
from click.testing import CliRunner

from mopeclt.cli.main import cli, main


@pytest.fixture
def runner():
    return CliRunner()


def _read_csv(path):
    with open(path, newline='') as f:
        return list(csv.DictReader(f))


class TestVariance:
    """Tests for the variance command."""

    def test_writes_window_and_report(self, runner, temp_config_file, tmp_path):
        out = tmp_path / "results"
        result = runner.invoke(cli, ["variance", "--config", str(temp_config_file),
                                     "--out", str(out)])

        assert result.exit_code == 0, result.output
        assert "variance" in result.output

        rows = _read_csv(out / "laurent.csv")
        assert list(rows[0]) == ["ell", "f_ell", "error_bound"]
        by_ell = {int(row["ell"]): float(row["f_ell"]) for row in rows}
        assert by_ell[2] == pytest.approx(1.0)

        report = json.loads((out / "variance.json").read_text())
        # c(z) = z + z/(z^2 - 1): r_2 = 1, r_-2 = 3, r_1 = r_-1 = 0
        assert report["variance"] == pytest.approx(6.0, rel=1e-10)
        assert report["routes_agree"] is True
        assert set(report["finite_n_variance"]) == {"20", "40"}

    def test_repeat_runs_are_identical(self, runner, temp_config_file, tmp_path):
        for name in ("a", "b"):
            runner.invoke(cli, ["variance", "--config", str(temp_config_file),
                                "--out", str(tmp_path / name)])
        assert ((tmp_path / "a" / "laurent.csv").read_bytes()
                == (tmp_path / "b" / "laurent.csv").read_bytes())

    def test_malformed_config(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        result = runner.invoke(cli, ["variance", "--config", str(bad), "--out", str(tmp_path)])
        assert result.exit_code == 2
        assert "Error" in result.output

    def test_missing_config(self, runner, tmp_path):
        result = runner.invoke(cli, ["variance", "--config", str(tmp_path / "none.json")])
        assert result.exit_code == 2


class TestConverge:
    """Tests for the converge command."""

    def test_sweep_files(self, runner, temp_config_file, tmp_path):
        result = runner.invoke(cli, ["converge", "--config", str(temp_config_file),
                                     "--out", str(tmp_path)])
        assert result.exit_code == 0, result.output

        rows = _read_csv(tmp_path / "converge.csv")
        assert len(rows) == 2 * 4
        assert [(row["n"], row["m"]) for row in rows[:4]] == [
            ("20", "1"), ("20", "2"), ("20", "3"), ("20", "4")]
        assert rows[0]["reference"] == ""
        second = [row for row in rows if row["m"] == "2"]
        assert all(float(row["reference"]) == pytest.approx(6.0, rel=1e-10) for row in second)

        limits = _read_csv(tmp_path / "right_limit.csv")
        assert [row["n"] for row in limits] == ["20", "40"]


class TestVerify:
    """Tests for the verify command."""

    def test_identities(self, runner, tmp_path):
        result = runner.invoke(cli, ["verify", "identities", "--out", str(tmp_path)])
        assert result.exit_code == 0, result.output
        assert "identities: PASS" in result.output
        report = json.loads((tmp_path / "verify.json").read_text())
        assert report["passed"] is True
        assert report["results"][0]["suite"] == "identities"

    def test_tolerances_from_config(self, runner, temp_config_file, tmp_path):
        result = runner.invoke(cli, ["verify", "identities", "--config", str(temp_config_file),
                                     "--out", str(tmp_path)])
        assert result.exit_code == 0, result.output
        report = json.loads((tmp_path / "verify.json").read_text())
        assert report["tolerances"]["bch_rtol"] == 1e-10

    def test_unknown_suite(self, runner, tmp_path):
        result = runner.invoke(cli, ["verify", "everything", "--out", str(tmp_path)])
        assert result.exit_code == 2


class TestDumpMatrix:
    """Tests for the dump-matrix command."""

    def test_recurrence_window(self, runner, temp_config_file, tmp_path):
        result = runner.invoke(cli, ["dump-matrix", "--config", str(temp_config_file),
                                     "--out", str(tmp_path), "--rows", "0", "3",
                                     "--cols", "0", "4"])
        assert result.exit_code == 0, result.output
        rows = _read_csv(tmp_path / "matrix.csv")
        assert len(rows) == 4 * 5
        cells = {(int(r["row"]), int(r["col"])): float(r["value"]) for r in rows}
        assert cells[(0, 1)] == 1.0
        assert cells[(0, 4)] == 0.0

    def test_limiting_matrix(self, runner, temp_config_file, tmp_path):
        result = runner.invoke(cli, ["dump-matrix", "--config", str(temp_config_file),
                                     "--out", str(tmp_path), "--matrix", "Tc"])
        assert result.exit_code == 0, result.output
        cells = {(int(r["row"]), int(r["col"])): float(r["value"])
                 for r in _read_csv(tmp_path / "matrix.csv")}
        assert len(cells) == 100
        assert cells[(0, 0)] == 1.0
        assert cells[(1, 1)] == -1.0

    def test_reversed_bounds(self, runner, temp_config_file, tmp_path):
        result = runner.invoke(cli, ["dump-matrix", "--config", str(temp_config_file),
                                     "--out", str(tmp_path), "--rows", "5", "2"])
        assert result.exit_code == 2


class TestOracle:
    """Tests for the oracle command."""

    def test_tiny_krawtchouk(self, runner, oracle_config_file, tmp_path):
        result = runner.invoke(cli, ["oracle", "--config", str(oracle_config_file),
                                     "--out", str(tmp_path)])
        assert result.exit_code == 0, result.output
        report = json.loads((tmp_path / "oracle.json").read_text())
        assert report["passed"] is True
        (entry,) = report["reports"]
        assert entry["multiplicities"] == [1, 1]
        assert entry["enumeration"]["matrix"] == "enumeration"

    def test_continuous_family_rejected(self, runner, temp_config_file, tmp_path):
        result = runner.invoke(cli, ["oracle", "--config", str(temp_config_file),
                                     "--out", str(tmp_path)])
        assert result.exit_code == 2


class TestEntryPoint:
    """Tests for main() and module execution."""

    def test_main_returns_exit_code(self, tmp_path):
        assert main(["verify", "identities", "--out", str(tmp_path)]) == 0

    def test_main_usage_error(self):
        assert main(["verify"]) == 2

    def test_cli_help(self):
        """Test that the CLI help works."""
        result = subprocess.run(
            [sys.executable, "-m", "mopeclt.cli.main", "--help"],
            capture_output=True,
            text=True
        )
        assert result.returncode == 0
        assert "converge" in result.stdout
