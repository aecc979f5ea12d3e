"""
Exact combinatorial prefactors for cumulant and BCH expansions.

All coefficients are fractions.Fraction so the cancellations between
compositions survive intact; callers convert to float only at the point of
multiplying a trace.
"""

import math
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

Composition = Tuple[int, ...]


@lru_cache(maxsize=None)
def compositions(m: int) -> Tuple[Composition, ...]:
    """
    Ordered compositions l_1 + ... + l_j = m with every l_i >= 1.

    Returned in lexicographic order, which fixes the summation order of
    every cumulant reduction.

    Example:
        >>> compositions(3)
        ((1, 1, 1), (1, 2), (2, 1), (3,))
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if m == 0:
        return ((),)
    out: List[Composition] = []
    for first in range(1, m + 1):
        for rest in compositions(m - first):
            out.append((first,) + rest)
    return tuple(sorted(out))


def inverse_factorial_product(parts: Composition) -> Fraction:
    """1 / (l_1! ... l_j!)."""
    denom = 1
    for part in parts:
        denom *= math.factorial(part)
    return Fraction(1, denom)


@lru_cache(maxsize=None)
def cumulant_prefactors(m: int) -> Tuple[Tuple[Composition, Fraction], ...]:
    """
    Pairs (composition, m! (-1)^(j+1) / (j l_1! ... l_j!)) for every composition of m.

    C_m^(n)(B) = sum over pairs of prefactor * Tr P_n B^(l_1) P_n ... B^(l_j) P_n.
    """
    if m < 1:
        raise ValueError(f"cumulant order must be >= 1, got {m}")
    fact = math.factorial(m)
    out = []
    for parts in compositions(m):
        j = len(parts)
        sign = 1 if j % 2 == 1 else -1
        out.append((parts, Fraction(sign * fact, j) * inverse_factorial_product(parts)))
    return tuple(out)


def partition_identity_sum(m: int) -> Fraction:
    """
    sum_j (-1)^(j+1)/j sum_{l_1+..+l_j = m} 1/(l_1! ... l_j!).

    This is the t^m coefficient of log(exp(t)) = t, so it is 1 for m = 1
    and exactly 0 for every m >= 2.
    """
    total = Fraction(0)
    for parts in compositions(m):
        j = len(parts)
        sign = 1 if j % 2 == 1 else -1
        total += Fraction(sign, j) * inverse_factorial_product(parts)
    return total


# =============================================================================
# Dynkin form of log(exp(X) exp(Y))
# =============================================================================

DynkinWord = Tuple[int, ...]


def _block_sequences(m: int) -> List[Tuple[Tuple[int, int], ...]]:
    """Sequences of blocks (u, v), u + v >= 1, with total degree m."""
    if m == 0:
        return [()]
    out: List[Tuple[Tuple[int, int], ...]] = []
    for size in range(1, m + 1):
        for u in range(size + 1):
            for rest in _block_sequences(m - size):
                out.append(((u, size - u),) + rest)
    return out


@lru_cache(maxsize=None)
def dynkin_words(m: int) -> Tuple[Tuple[DynkinWord, Fraction], ...]:
    """
    Degree-m terms of the Dynkin series for log(e^X e^Y).

    Each entry is ((u_1, v_1, ..., u_j, v_j), coefficient) with u_i + v_i >= 1,
    sum (u_i + v_i) = m and

        coefficient = (-1)^(j+1) / (j * m * prod u_i! v_i!)

    so that the degree-m term equals sum coefficient * [X^(u_1), Y^(v_1), ...].
    Words whose right-nested bracket vanishes identically (last block Y^v
    with v > 1, or X^u with u > 1 and v = 0) are dropped.
    """
    if m < 1:
        raise ValueError(f"degree must be >= 1, got {m}")
    out = []
    for choice in _block_sequences(m):
        u_last, v_last = choice[-1]
        if v_last > 1 or (v_last == 0 and u_last > 1):
            continue
        word = tuple(x for pair in choice for x in pair)
        j = len(choice)
        denom = j * m
        for u, v in choice:
            denom *= math.factorial(u) * math.factorial(v)
        sign = 1 if j % 2 == 1 else -1
        out.append((word, Fraction(sign, denom)))
    return tuple(sorted(out))


def word_letters(word: DynkinWord) -> Tuple[int, ...]:
    """
    Expand (u_1, v_1, ...) into a letter sequence, 0 for X and 1 for Y.

    Example:
        >>> word_letters((2, 1))
        (0, 0, 1)
    """
    if len(word) % 2:
        raise ValueError(f"word needs an even number of exponents, got {word}")
    letters: List[int] = []
    for i in range(0, len(word), 2):
        letters.extend([0] * word[i])
        letters.extend([1] * word[i + 1])
    return tuple(letters)


def bch_words(m: int) -> Tuple[DynkinWord, ...]:
    """Distinct nonvanishing words of total degree m, in sorted order."""
    return tuple(sorted({word for word, _ in dynkin_words(m)}))
