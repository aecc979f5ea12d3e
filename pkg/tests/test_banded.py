"""
Tests for truncated one-sided banded matrices.
"""

from fractions import Fraction

import numpy as np
import pytest

from mopeclt.core.banded import (
    HessenbergMatrix,
    commutator,
    dynkin_bracket,
    exp_trunc,
    from_dense,
    identity,
    matrix_polynomial,
    multiply,
    power,
    shift,
    split,
    trace_product,
)
from mopeclt.exceptions import WindowExhaustedError


def _random_hessenberg(size, bandwidth, seed=0):
    rng = np.random.default_rng(seed)
    return np.tril(rng.standard_normal((size, size)), bandwidth)


def _tridiagonal(size):
    return np.eye(size, k=1) + np.eye(size, k=-1)


class TestStorage:
    """Construction and windows."""

    def test_above_band_rejected(self):
        data = np.zeros((3, 4))
        data[0, 3] = 1.0
        with pytest.raises(ValueError):
            HessenbergMatrix(data, 1)

    def test_from_dense_drops_incomplete_rows(self):
        B = from_dense(_tridiagonal(10), 1)
        assert B.exact_rows == 9
        assert B.bandwidth == 1

    def test_window_zero_pads_columns(self):
        B = from_dense(_tridiagonal(6), 1)
        block = B.window(0, 2, 0, 10)
        assert block.shape == (2, 10)
        assert block[1].tolist()[:3] == [1.0, 0.0, 1.0]
        assert not block[:, 3:].any()

    def test_read_beyond_exact_rows(self):
        B = from_dense(_tridiagonal(6), 1)
        with pytest.raises(WindowExhaustedError) as exc_info:
            B.window(0, 6, 0, 6)
        assert exc_info.value.available == 5

    def test_entry_above_band_is_zero(self):
        assert shift(5).entry(0, 4) == 0.0


class TestArithmetic:
    """Products, powers and polynomials."""

    def test_identity_product(self):
        product = multiply(identity(5), identity(5))
        np.testing.assert_array_equal(product.dense(5), np.eye(5))

    def test_shift_squared(self):
        S2 = shift(8) @ shift(8)
        assert S2.bandwidth == 2
        assert S2.exact_rows == 7
        assert S2.entry(0, 2) == 1.0
        assert S2.entry(0, 1) == 0.0

    def test_tridiagonal_squared(self):
        T = from_dense(_tridiagonal(12), 1)
        T2 = power(T, 2)
        assert T2.entry(0, 0) == 1.0
        for i in range(1, T2.exact_rows):
            assert T2.entry(i, i) == 2.0
            assert T2.entry(i, i + 2) == 1.0

    def test_product_matches_dense(self):
        M = _random_hessenberg(30, 2, seed=1)
        B = from_dense(M, 2)
        np.testing.assert_allclose((B @ B).dense(10), (M @ M)[:10, :10], atol=1e-12)

    def test_exp_trunc_nilpotent_shift(self):
        E = exp_trunc(shift(6), 1.0, 2)
        assert E.bandwidth == 2
        assert [E.entry(0, k) for k in range(3)] == [1.0, 1.0, 0.5]

    def test_exp_trunc_order_zero(self):
        E = exp_trunc(from_dense(_tridiagonal(8), 1), 3.0, 0)
        np.testing.assert_array_equal(E.dense(4), np.eye(4))

    def test_exp_trunc_scalar_matrix(self):
        E = exp_trunc(identity(4), 0.5, 3)
        np.testing.assert_allclose(np.diagonal(E.dense(4)), 1 + 0.5 + 0.125 + 0.5 ** 3 / 6)

    def test_matrix_polynomial(self):
        M = _tridiagonal(12)
        T = from_dense(M, 1)
        P = matrix_polynomial([1.0, 0.0, 1.0], T)
        np.testing.assert_array_equal(P.dense(8), (np.eye(12) + M @ M)[:8, :8])

    def test_exact_arithmetic(self):
        B = from_dense(np.array([[Fraction(1, 3), Fraction(1), Fraction(0)],
                                 [Fraction(1, 7), Fraction(2, 5), Fraction(1)],
                                 [Fraction(0), Fraction(1, 2), Fraction(1)]], dtype=object), 1)
        assert B.is_exact
        B2 = power(B, 2)
        assert B2.entry(0, 0) == Fraction(1, 9) + Fraction(1, 7)
        assert isinstance(B2.entry(0, 0), Fraction)
        assert not B2.to_float().is_exact


class TestProjectedTraces:
    """Traces of P_n B^l P_n products."""

    def test_matches_dense(self):
        M = _random_hessenberg(30, 1, seed=2)
        B = from_dense(M, 1)
        n = 6
        blocks = {l: np.linalg.matrix_power(M, l)[:n, :n] for l in (1, 2, 3)}
        expected = np.trace(blocks[1] @ blocks[2] @ blocks[3])
        assert trace_product(B, n, (1, 2, 3)) == pytest.approx(expected, rel=1e-12)

    def test_single_factor_is_plain_trace(self):
        M = _random_hessenberg(20, 1, seed=3)
        B = from_dense(M, 1)
        assert trace_product(B, 5, (2,)) == pytest.approx(np.trace((M @ M)[:5, :5]))

    def test_empty_projection(self):
        assert trace_product(shift(5), 0, (1,)) == 0.0

    def test_window_exhausted(self):
        B = from_dense(_random_hessenberg(30, 1), 1)
        with pytest.raises(WindowExhaustedError):
            trace_product(B, 29, (3,))

    def test_bad_exponents(self):
        with pytest.raises(ValueError):
            trace_product(shift(5), 2, (0,))


class TestCommutators:
    """Splitting and nested brackets."""

    def test_split_parts(self):
        M = _random_hessenberg(12, 1, seed=4)
        pair = split(from_dense(M, 1))
        minus = pair.minus.dense(8)
        plus = pair.plus.dense(8)
        assert not np.triu(minus).any()
        assert not np.tril(plus, -1).any()
        np.testing.assert_array_equal(pair.total().dense(8), M[:8, :8])

    def test_self_commutator_vanishes(self):
        B = from_dense(_random_hessenberg(15, 1, seed=5), 1)
        assert commutator(B, B).max_abs() == 0.0

    def test_nested_bracket_matches_dense(self):
        M = _random_hessenberg(40, 1, seed=6)
        pair = split(from_dense(M, 1))
        X = np.tril(M, -1)
        Y = np.triu(M)
        inner = X @ Y - Y @ X
        expected = X @ inner - inner @ X
        bracket = dynkin_bracket(pair, (2, 1))
        np.testing.assert_allclose(bracket.dense(10), expected[:10, :10], atol=1e-12)
