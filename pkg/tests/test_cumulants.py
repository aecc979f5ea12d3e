"""
Tests for finite-n cumulants, the MGF determinant and commutator traces.
"""

from fractions import Fraction

import numpy as np
import pytest

from mopeclt.core.banded import split
from mopeclt.core.cumulants import (
    CumulantReport,
    bch_commutator_trace,
    cumulant,
    cumulant_difference_windowed,
    cumulants_from_mgf,
    cumulants_upto,
    dense_dynkin_trace,
    dynkin_cumulant,
    linear_statistic_cumulants,
    locality_radius,
    mgf_determinant,
    moments_to_cumulants,
    rows_for_mgf,
    rows_for_statistic,
    thread_count,
)
from mopeclt.core.combinatorics import bch_words
from mopeclt.core.recurrence import build_J, build_Tc, toeplitz_matrix
from mopeclt.core.symbol import RationalSymbol, compose_laurent_series, finite_n_variance
from mopeclt.enums import MatrixKind
from mopeclt.exceptions import ConfigError, WindowExhaustedError


@pytest.fixture
def joukowski_square(joukowski):
    """Laurent window and Toeplitz matrix of (z + 2/z)^2."""
    w = compose_laurent_series([0.0, 0.0, 1.0], joukowski)
    return w, toeplitz_matrix(w, 22)


class TestTraceCumulants:
    """C_m^(n) from projected traces."""

    def test_first_cumulant_is_trace(self, hermite2, path2):
        J = build_J(hermite2, path2, 12)
        assert cumulant(J, 10, 1) == pytest.approx(np.trace(J.dense(10)))

    def test_joukowski_second_cumulant(self, joukowski):
        w = compose_laurent_series([0.0, 1.0], joukowski)
        T = toeplitz_matrix(w, 4)
        assert cumulant(T, 3, 2) == pytest.approx(2.0, rel=1e-15)

    @pytest.mark.parametrize("n", [1, 2, 5, 12])
    def test_toeplitz_second_cumulant_is_finite_variance(self, joukowski_square, n):
        w, T = joukowski_square
        assert cumulant(T, n, 2) == pytest.approx(finite_n_variance(w, n), rel=1e-13)

    def test_empty_projection(self, joukowski_square):
        _, T = joukowski_square
        assert cumulant(T, 0, 3) == 0.0

    def test_window_exhausted(self, joukowski_square):
        _, T = joukowski_square
        with pytest.raises(WindowExhaustedError):
            cumulant(T, 20, 3)

    def test_exact_entries_give_fractions(self):
        w = compose_laurent_series([0.0, 0.0, 1.0],
                                   RationalSymbol(poles=[0.0], residues=[0.5]), L=12, exact=True,
                                   certify_tail=False)
        T = toeplitz_matrix(w, 10)
        value = cumulant(T, 6, 2)
        assert isinstance(value, Fraction)
        assert value == Fraction(1, 2)

    def test_hermite_trace_statistic_is_gaussian(self, hermite2, path2):
        """X_n(x) is the trace of a shifted Gaussian matrix: C_2 = 1, C_3 = C_4 = 0."""
        report = linear_statistic_cumulants(hermite2, path2, [0.0, 1.0], 40, 4)
        assert report.values[2] == pytest.approx(1.0, rel=1e-12)
        for m in (3, 4):
            assert abs(report.values[m]) <= 1e-10 * max(report.scales[m], 1.0)
        assert report.matrix_id == MatrixKind.F_OF_J
        assert report.to_dict()["matrix"] == "f_J"

    def test_rows_needed(self):
        assert rows_for_statistic([0.0, 0.0, 1.0], 10, 4) == 16
        assert rows_for_mgf([0.0, 0.0, 1.0], 10, 3) == 15
        assert rows_for_mgf([0.0, 1.0], 10, 5) == 14


class TestCumulantReport:
    """Report validation."""

    def test_orders_must_be_contiguous(self):
        with pytest.raises(ValueError):
            CumulantReport(n=3, values={1: 0.0, 3: 1.0}, matrix_id=MatrixKind.J)

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            CumulantReport(n=3, values={1: float("nan")}, matrix_id=MatrixKind.J)

    def test_enumeration_label(self):
        report = CumulantReport(n=2, values={1: 0.5}, matrix_id=None)
        assert report.to_dict()["matrix"] == "enumeration"


class TestThreads:
    """MOPE_THREADS handling."""

    def test_default(self, monkeypatch):
        monkeypatch.delenv("MOPE_THREADS", raising=False)
        assert thread_count() == 1

    @pytest.mark.parametrize("raw", ["abc", "0", "-2", "1.5"])
    def test_invalid(self, monkeypatch, raw):
        monkeypatch.setenv("MOPE_THREADS", raw)
        with pytest.raises(ConfigError):
            thread_count()

    def test_threaded_sum_is_identical(self, monkeypatch, joukowski_square):
        _, T = joukowski_square
        monkeypatch.setenv("MOPE_THREADS", "1")
        serial, _ = cumulants_upto(T, 8, 5)
        monkeypatch.setenv("MOPE_THREADS", "4")
        threaded, _ = cumulants_upto(T, 8, 5)
        assert serial == threaded


class TestMgfDeterminant:
    """det P_n exp_r(lambda f(J)) P_n."""

    def test_lambda_zero(self, hermite2, path2):
        J = build_J(hermite2, path2, 20)
        assert mgf_determinant(J, [0.0, 1.0], 0.0, 10) == 1.0

    def test_too_few_rows(self, hermite2, path2):
        J = build_J(hermite2, path2, 10)
        with pytest.raises(WindowExhaustedError):
            mgf_determinant(J, [0.0, 1.0], 0.1, 10, r=5)

    def test_derivatives_match_traces(self, hermite2, path2):
        n = 50
        J = build_J(hermite2.with_n_scale(n), path2, rows_for_mgf([0.0, 1.0], n, 5))
        from_mgf = cumulants_from_mgf(J, [0.0, 1.0], n, m_max=3)
        from_traces, _ = cumulants_upto(J, n, 3)
        assert from_mgf[1] == pytest.approx(from_traces[1], rel=1e-5, abs=1e-8)
        assert from_mgf[2] == pytest.approx(from_traces[2], rel=1e-5)
        assert from_mgf[3] == pytest.approx(from_traces[3], abs=1e-4)

    def test_stencil_order_limit(self, hermite2, path2):
        J = build_J(hermite2, path2, 20)
        with pytest.raises(ValueError):
            cumulants_from_mgf(J, [0.0, 1.0], 5, m_max=5)


class TestWindowedDifference:
    """Cumulant differences from a window around n."""

    def test_radius(self):
        assert locality_radius(2, 1) == 8
        assert locality_radius(3, 2) == 36

    def test_identical_matrices(self, hermite2, path2):
        J = build_J(hermite2, path2, 60)
        assert cumulant_difference_windowed(J, J, 30, 3) == 0.0

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_matches_full_difference(self, hermite2, hermite2_symbol, path2, m):
        n = 30
        J = build_J(hermite2, path2, 60)
        Tc = build_Tc(hermite2_symbol, path2, 60)
        full = cumulant(J, n, m) - cumulant(Tc, n, m)
        windowed = cumulant_difference_windowed(J, Tc, n, m)
        assert windowed == pytest.approx(full, abs=1e-10)


class TestCommutatorTraces:
    """BCH traces of the split B = B_- + B_+."""

    def test_second_order_is_minus_variance(self, joukowski_square):
        w, T = joukowski_square
        trace = bch_commutator_trace(split(T), 10, (1, 1))
        assert trace.value == pytest.approx(-finite_n_variance(w, 10), rel=1e-12)
        assert trace.degree == 2

    def test_dynkin_second_order(self, joukowski_square):
        _, T = joukowski_square
        value, _ = dynkin_cumulant(split(T), 10, 2)
        assert value == pytest.approx(cumulant(T, 10, 2), rel=1e-12)

    @pytest.mark.parametrize("m", [3, 4])
    def test_higher_words_vanish(self, joukowski_square, m):
        _, T = joukowski_square
        pair = split(T)
        for word in bch_words(m):
            trace = bch_commutator_trace(pair, 10, word)
            assert abs(trace.value) <= 1e-10 * max(trace.scale, 1.0)

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_dense_traces_vanish(self, m):
        rng = np.random.default_rng(11)
        A1 = rng.standard_normal((5, 5))
        A2 = rng.standard_normal((5, 5))
        value, scale = dense_dynkin_trace(A1, A2, m)
        assert abs(value) <= 1e-12 * scale


class TestMomentConversion:
    """Raw moments to cumulants."""

    def test_standard_normal(self):
        assert moments_to_cumulants([0.0, 1.0, 0.0, 3.0]) == [0.0, 1.0, 0.0, 0.0]

    def test_poisson_exact(self):
        moments = [Fraction(v) for v in (1, 2, 5, 15)]
        assert moments_to_cumulants(moments) == [1, 1, 1, 1]
