"""
Tests for the family coefficients, Nevai limits and weights.
"""

import numpy as np
import pytest

from mopeclt.core.families import (
    base_measure,
    krawtchouk_gamma,
    krawtchouk_p_from_gamma,
    make_family,
    nevai_limits,
    nn_coeffs,
    nn_coeffs_batch,
    weight_eval,
    weighted_measures,
)
from mopeclt.core.measures import ContinuousDensity, DiscreteMeasure
from mopeclt.core.symbol import RationalSymbol
from mopeclt.exceptions import ConfluenceError, ParameterDomainError


class TestNearestNeighborCoefficients:
    """Worked coefficient examples for each family."""

    def test_hermite(self):
        spec = make_family("hermite", 2, n_scale=10, a=(1.0, -1.0))
        a, b = nn_coeffs(spec, (2, 1))
        np.testing.assert_allclose(a, [0.2, 0.1])
        np.testing.assert_array_equal(b, [1.0, -1.0])

    def test_charlier_unscaled_exact(self, charlier_unscaled):
        a, b = nn_coeffs(charlier_unscaled, (1, 1))
        assert a.tolist() == [1.0, 2.0]
        assert b.tolist() == [3.0, 4.0]

    def test_laguerre2(self):
        spec = make_family("laguerre2", 2, n_scale=2, alpha=0.0, sigma=(1.0, 2.0))
        a, b = nn_coeffs(spec, (1, 1))
        assert a.tolist() == [0.5, 0.125]
        assert b[0] == 2.25

    def test_krawtchouk_unscaled_exact(self):
        spec = make_family("krawtchouk", 2, n_scale=2, t=3.0, p=(0.5, 0.25), scaled=False)
        a, b = nn_coeffs(spec, (1, 0))
        assert a[0] == 1.0
        assert b[0] == 2.0

    def test_batch_matches_single(self, hermite2):
        K = np.array([[0, 0], [1, 0], [3, 2], [5, 7]])
        A, B = nn_coeffs_batch(hermite2, K)
        for row, k in enumerate(K):
            a, b = nn_coeffs(hermite2, k)
            np.testing.assert_array_equal(A[row], a)
            np.testing.assert_array_equal(B[row], b)

    @pytest.mark.parametrize("family,params", [
        ("hermite", {"a": (1.0, -1.0)}),
        ("laguerre2", {"sigma": (1.0, 2.0), "alpha": 1.5}),
        ("charlier", {"lambda": 1.0, "tau": 0.5, "gamma": (0.5, 1.0)}),
        ("krawtchouk", {"tau": 2.0, "p": (0.25, 0.5)}),
    ])
    def test_a_coefficients_nonnegative(self, family, params):
        """a_{k,j} >= 0 for every |k| <= 50."""
        spec = make_family(family, 2, n_scale=30, **params)
        K = np.array([(i, j) for i in range(51) for j in range(51 - i)])
        A, _ = nn_coeffs_batch(spec, K)
        assert np.all(A >= 0)

    def test_negative_index_rejected(self, hermite2):
        with pytest.raises(ParameterDomainError):
            nn_coeffs(hermite2, (-1, 2))

    def test_wrong_length_rejected(self, hermite2):
        with pytest.raises(ParameterDomainError):
            nn_coeffs(hermite2, (1, 2, 3))


class TestFamilyValidation:
    """Parameter range and distinctness checks."""

    def test_repeated_hermite_sources(self):
        with pytest.raises(ParameterDomainError):
            make_family("hermite", 2, a=(1.0, 1.0))

    def test_wrong_vector_length(self):
        with pytest.raises(ParameterDomainError):
            make_family("hermite", 2, a=(1.0,))

    def test_charlier_gamma_range(self):
        with pytest.raises(ParameterDomainError):
            make_family("charlier", 1, **{"lambda": 1.0, "tau": 1.0, "gamma": (1.5,)})

    def test_krawtchouk_p_range(self):
        with pytest.raises(ParameterDomainError):
            make_family("krawtchouk", 1, tau=1.0, p=(1.0,))

    def test_scaled_needs_tau(self):
        with pytest.raises(ParameterDomainError):
            make_family("charlier", 1, **{"lambda": 1.0, "gamma": (0.5,)})

    def test_unscaled_krawtchouk_needs_integer_time(self):
        with pytest.raises(ParameterDomainError):
            make_family("krawtchouk", 1, t=2.5, p=(0.5,), scaled=False)

    def test_lambda_keyword_alias(self):
        spec = make_family("charlier", 1, lambda_=2.0, tau=1.0, gamma=(0.5,))
        assert spec.params.lam == 2.0


class TestNevaiLimits:
    """Limiting symbols and their agreement with large-n coefficients."""

    def test_hermite(self):
        spec = make_family("hermite", 2, a=(1.0, -1.0))
        symbol = nevai_limits(spec, (0.5, 0.5))
        np.testing.assert_array_equal(symbol.residues, [0.5, 0.5])
        np.testing.assert_array_equal(symbol.poles, [1.0, -1.0])

    def test_charlier(self):
        spec = make_family("charlier", 2, **{"lambda": 1.0, "tau": 1.0, "gamma": (0.5, 1.0)})
        symbol = nevai_limits(spec, (0.5, 0.5))
        np.testing.assert_allclose(symbol.residues, [0.25, 0.5])
        np.testing.assert_allclose(symbol.poles, [1.5, 2.0])

    def test_single_hermite_is_joukowski(self):
        spec = make_family("hermite", 1, a=(0.0,))
        symbol = nevai_limits(spec, (1.0,))
        assert symbol.poles.tolist() == [0.0]
        assert symbol.residues.tolist() == [1.0]

    @pytest.mark.parametrize("family,params", [
        ("hermite", {"a": (1.0, -1.0)}),
        ("laguerre2", {"sigma": (1.0, 2.0)}),
        ("charlier", {"lambda": 1.0, "tau": 1.0, "gamma": (0.5, 1.0)}),
        ("krawtchouk", {"tau": 1.0, "p": (0.25, 0.5)}),
    ])
    @pytest.mark.parametrize("N", [1000, 10000, 100000])
    def test_limits_match_large_n(self, family, params, N):
        """Scaled coefficients at k = N nu are within 10 m / N of the limits."""
        nu = np.array([0.5, 0.5])
        symbol = nevai_limits(make_family(family, 2, **params), nu)
        a, b = nn_coeffs(make_family(family, 2, n_scale=N, **params), np.round(N * nu))
        assert np.max(np.abs(a - symbol.residues)) <= 10 * 2 / N
        assert np.max(np.abs(b - symbol.poles)) <= 10 * 2 / N

    def test_nu_must_sum_to_one(self, hermite2):
        with pytest.raises(ParameterDomainError):
            nevai_limits(hermite2, (0.5, 0.6))

    def test_confluent_symbol_rejected(self):
        with pytest.raises(ConfluenceError):
            RationalSymbol(poles=[1.0, 1.0], residues=[0.5, 0.5])


class TestWeights:
    """Weights and base measures."""

    def test_charlier_weight(self):
        spec = make_family("charlier", 2, **{"lambda": 1.0, "tau": 1.0, "gamma": (0.5, 1.0)})
        assert float(weight_eval(spec, 0, 3)) == 0.125

    def test_krawtchouk_base_mass_at_zero(self):
        spec = make_family("krawtchouk", 1, n_scale=2, t=3.0, p=(0.5,), scaled=False)
        mu = base_measure(spec)
        assert isinstance(mu, DiscreteMeasure)
        assert mu.support.tolist() == [0.0, 1.0, 2.0, 3.0, 4.0]
        assert mu.masses[0] == pytest.approx(1.0 / 24.0, rel=1e-14)

    def test_weights_nonnegative_on_support(self, krawtchouk_tiny, charlier_unscaled):
        for spec in (krawtchouk_tiny, charlier_unscaled):
            for measure in weighted_measures(spec):
                assert np.all(measure.masses > 0)

    def test_point_outside_support(self, krawtchouk_tiny):
        with pytest.raises(ParameterDomainError):
            weight_eval(krawtchouk_tiny, 0, 4)
        with pytest.raises(ParameterDomainError):
            weight_eval(krawtchouk_tiny, 0, 1.5)

    def test_charlier_truncation_recorded(self, charlier_unscaled):
        mu = base_measure(charlier_unscaled)
        assert mu.truncated
        assert mu.tail_bound < 1e-16

    def test_continuous_base_measure(self, hermite2):
        assert isinstance(base_measure(hermite2), ContinuousDensity)
        with pytest.raises(ParameterDomainError):
            weighted_measures(hermite2)

    def test_krawtchouk_gamma_roundtrip(self):
        p = np.array([0.25, 0.5])
        gamma = krawtchouk_gamma(p, base_ratio=2.0)
        np.testing.assert_allclose(gamma * 2.0, p / (1 - p))
        np.testing.assert_allclose(krawtchouk_p_from_gamma(gamma, base_ratio=2.0), p)
