"""
Tests for the limiting symbol, Laurent windows and variances.
"""

from fractions import Fraction

import numpy as np
import pytest

from mopeclt.core.symbol import (
    RationalSymbol,
    compose_laurent,
    compose_laurent_series,
    degree,
    finite_n_variance,
    limiting_variance,
    positive_part,
    principal_parts,
    symbolic_laurent_coefficients,
)
from mopeclt.enums import LaurentMethod
from mopeclt.exceptions import (
    ContourError,
    ParameterDomainError,
    UncertifiedWindowError,
    WindowTooNarrowError,
)


@pytest.fixture
def decaying_symbol():
    """Poles inside the unit disk, so the negative tail decays geometrically."""
    return RationalSymbol(poles=[0.5, -0.25], residues=[1.0, 0.5])


class TestRationalSymbol:
    """Construction and evaluation."""

    def test_evaluate(self, two_pole_symbol):
        value = complex(two_pole_symbol(2.0))
        assert value == pytest.approx(2.0 + 0.5 / 1.0 + 0.25 / 2.5)

    def test_mismatched_lengths(self):
        with pytest.raises(ParameterDomainError):
            RationalSymbol(poles=[0.0, 1.0], residues=[1.0])

    def test_default_radius_encloses_poles(self, two_pole_symbol):
        assert two_pole_symbol.default_radius() > np.max(np.abs(two_pole_symbol.poles))

    def test_degree(self):
        assert degree([1.0, 0.0, 3.0, 0.0]) == 2
        assert degree([5.0]) == 0


class TestJoukowskiExamples:
    """c(z) = z + a/z with a = 2."""

    def test_linear(self, joukowski):
        w = compose_laurent_series([0.0, 1.0], joukowski)
        assert w.coefficient(1) == 1.0
        assert w.coefficient(0) == 0.0
        assert w.coefficient(-1) == 2.0
        assert w.coefficient(-2) == 0.0
        assert limiting_variance(w) == 2.0

    def test_square(self, joukowski):
        w = compose_laurent_series([0.0, 0.0, 1.0], joukowski)
        assert w.coefficient(2) == 1.0
        assert w.coefficient(0) == 4.0
        assert w.coefficient(-2) == 4.0
        assert limiting_variance(w) == 8.0

    def test_finite_n_variance(self, joukowski):
        w = compose_laurent_series([0.0, 0.0, 1.0], joukowski)
        assert finite_n_variance(w, 0) == 0.0
        assert finite_n_variance(w, 1) == 4.0
        assert finite_n_variance(w, 2) == 8.0
        assert finite_n_variance(w, 50) == 8.0

    def test_finite_n_variance_cube(self, joukowski):
        # (z + 2/z)^3 = z^3 + 6z + 12/z + 8/z^3
        w = compose_laurent_series([0.0, 0.0, 0.0, 1.0], joukowski)
        assert [finite_n_variance(w, n) for n in range(5)] == [0.0, 80.0, 88.0, 96.0, 96.0]
        assert limiting_variance(w) == 96.0

    def test_coefficient_above_window_is_zero(self, joukowski):
        w = compose_laurent_series([0.0, 1.0], joukowski)
        assert w.coefficient(5) == 0.0

    def test_coefficient_below_window(self, joukowski):
        w = compose_laurent_series([0.0, 1.0], joukowski, L=4, certify_tail=False)
        with pytest.raises(WindowTooNarrowError):
            w.coefficient(-5)


class TestSeriesRoute:
    """Power-series extraction."""

    def test_two_pole_negative_coefficients(self, two_pole_symbol):
        w = compose_laurent_series([0.0, 1.0], two_pole_symbol, L=6, certify_tail=False)
        assert w.coefficient(-1) == 0.75
        assert w.coefficient(-2) == 0.5 * 1.0 + 0.25 * -0.5

    def test_unit_pole_not_tail_certified(self, two_pole_symbol):
        w = compose_laurent_series([0.0, 1.0], two_pole_symbol)
        assert not w.tail_certified

    def test_required_tail_raises_for_unit_pole(self, two_pole_symbol):
        """Test that an uncertifiable tail is an error when certification is required."""
        with pytest.raises(UncertifiedWindowError):
            compose_laurent_series([0.0, 1.0], two_pole_symbol, require_tail=True)
        with pytest.raises(UncertifiedWindowError):
            compose_laurent_series([0.0, 1.0], two_pole_symbol, certify_tail=False,
                                   require_tail=True)

    def test_decaying_tail_certified(self, decaying_symbol):
        w = compose_laurent_series([0.0, 0.0, 1.0], decaying_symbol)
        assert w.tail_certified
        assert w.tail_ratio <= 1e-14

    def test_exact_matches_sympy(self, two_pole_symbol):
        f = [1.0, -2.0, 0.5, 1.0]
        w = compose_laurent_series(f, two_pole_symbol, L=6, exact=True, certify_tail=False)
        reference = symbolic_laurent_coefficients(f, two_pole_symbol, depth=6)
        for ell, value in reference.items():
            assert w.coefficient(ell) == value
        assert isinstance(w.coefficient(-3), Fraction)

    def test_as_float(self, two_pole_symbol):
        w = compose_laurent_series([0.0, 1.0], two_pole_symbol, L=4, exact=True,
                                   certify_tail=False)
        assert w.as_float().values.dtype == float
        assert w.as_float().coefficient(-1) == 0.75


class TestQuadratureRoute:
    """Trapezoidal extraction and its agreement with the series route."""

    def test_agrees_with_series(self, decaying_symbol):
        f = [0.5, -1.0, 0.0, 2.0]
        quad = compose_laurent(f, decaying_symbol)
        series = compose_laurent_series(f, decaying_symbol)
        assert quad.method == LaurentMethod.QUADRATURE
        depth = min(quad.lower, series.lower, 12)
        scale = series.max_abs()
        for ell in range(-depth, 4):
            allowed = quad.error_bound(ell) + 1e-10 * scale
            assert abs(quad.coefficient(ell) - series.coefficient(ell)) <= allowed

    def test_radius_invariance(self, hermite2_symbol):
        f = [0.0, 0.0, 1.0]
        small = compose_laurent(f, hermite2_symbol, radius=2.5)
        large = compose_laurent(f, hermite2_symbol, radius=6.0)
        for ell in range(-2, 3):
            assert small.coefficient(ell) == pytest.approx(large.coefficient(ell), abs=1e-9)

    def test_hermite2_linear_variance(self, hermite2_symbol):
        # f = x: r_1 = 1 and r_-1 = a_1 + a_2
        w = compose_laurent([0.0, 1.0], hermite2_symbol)
        assert limiting_variance(w) == pytest.approx(1.0, abs=1e-12)

    def test_contour_inside_pole(self, two_pole_symbol):
        with pytest.raises(ContourError):
            compose_laurent([0.0, 1.0], two_pole_symbol, radius=0.5)

    def test_required_tail(self, two_pole_symbol, decaying_symbol):
        """Test that require_tail raises only when the tail cannot be certified."""
        assert not compose_laurent([0.0, 1.0], two_pole_symbol).tail_certified
        with pytest.raises(UncertifiedWindowError):
            compose_laurent([0.0, 1.0], two_pole_symbol, require_tail=True)
        assert compose_laurent([0.0, 0.0, 1.0], decaying_symbol, require_tail=True).tail_certified

    def test_noise_bounds_reported(self, decaying_symbol):
        w = compose_laurent([0.0, 1.0], decaying_symbol)
        assert w.error_bound(0) >= 0.0
        assert w.nodes is not None and w.nodes >= 16
        assert w.to_dict()["method"] == "quadrature"


class TestPartialFractions:
    """Principal and polynomial parts of f o c."""

    def test_linear_principal_parts(self, two_pole_symbol):
        alpha = principal_parts([0.0, 1.0], two_pole_symbol)
        np.testing.assert_allclose(alpha, [[0.5], [0.25]])

    def test_square_positive_part(self, joukowski):
        np.testing.assert_array_equal(positive_part([0.0, 0.0, 1.0], joukowski), [4.0, 0.0, 1.0])

    def test_exact_principal_parts(self, two_pole_symbol):
        alpha = principal_parts([0.0, 0.0, 1.0], two_pole_symbol, exact=True)
        assert alpha.shape == (2, 2)
        # (z - b_1)^-2 coefficient of c^2 is a_1^2
        assert alpha[0, 1] == Fraction(1, 4)
