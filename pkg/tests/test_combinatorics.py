"""
Tests for the exact composition and Dynkin prefactors.
"""

from fractions import Fraction

import pytest

from mopeclt.core.combinatorics import (
    bch_words,
    compositions,
    cumulant_prefactors,
    dynkin_words,
    partition_identity_sum,
    word_letters,
)


class TestCompositions:
    """Ordered compositions and cumulant prefactors."""

    @pytest.mark.parametrize("m", range(1, 11))
    def test_count(self, m):
        assert len(compositions(m)) == 2 ** (m - 1)

    def test_order(self):
        assert compositions(3) == ((1, 1, 1), (1, 2), (2, 1), (3,))

    def test_negative_order(self):
        with pytest.raises(ValueError):
            compositions(-1)

    def test_second_cumulant_prefactors(self):
        # C_2 = Tr P B^2 P - Tr P B P B P
        assert dict(cumulant_prefactors(2)) == {(1, 1): Fraction(-1), (2,): Fraction(1)}

    def test_first_cumulant_prefactor(self):
        assert cumulant_prefactors(1) == (((1,), Fraction(1)),)


class TestPartitionIdentity:
    """The t^m coefficient of log(exp(t))."""

    def test_first_order(self):
        assert partition_identity_sum(1) == 1

    @pytest.mark.parametrize("m", range(2, 13))
    def test_vanishes_exactly(self, m):
        assert partition_identity_sum(m) == Fraction(0)


class TestDynkinWords:
    """Degree-m words of log(e^X e^Y)."""

    def test_first_order(self):
        assert dict(dynkin_words(1)) == {(0, 1): Fraction(1), (1, 0): Fraction(1)}

    def test_second_order_reduces_to_half_commutator(self):
        words = dict(dynkin_words(2))
        assert words[(1, 1)] == Fraction(1, 2)
        # [X, Y] and [Y, X] from two single-letter blocks cancel
        assert words[(1, 0, 0, 1)] == words[(0, 1, 1, 0)] == Fraction(-1, 4)

    def test_vanishing_last_blocks_dropped(self):
        for m in range(2, 6):
            for word, _ in dynkin_words(m):
                u, v = word[-2], word[-1]
                assert v <= 1
                assert not (v == 0 and u > 1)

    def test_degree(self):
        for m in range(1, 6):
            assert all(sum(word) == m for word in bch_words(m))

    def test_letters(self):
        assert word_letters((2, 1)) == (0, 0, 1)
        assert word_letters((0, 1, 1, 0)) == (1, 0)

    def test_odd_word_rejected(self):
        with pytest.raises(ValueError):
            word_letters((1, 2, 3))
