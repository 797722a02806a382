"""Tests for exact binomial and rational helpers."""

import random
from fractions import Fraction
from math import gcd

import pytest

from ballotdet.errors import DomainError, IntegralityError
from ballotdet.exact import as_integer, binomial, pascal_check


def pascal_table(size: int) -> list[list[int]]:
    """Pascal's triangle built with additions only."""
    rows = [[1]]
    for n in range(1, size + 1):
        previous = rows[-1]
        rows.append([1] + [previous[r - 1] + previous[r] for r in range(1, n)] + [1])
    return rows


def test_binomial_examples():
    """Test the documented binomial values."""
    assert binomial(3, 4) == 0
    assert binomial(5, 0) == 1
    assert binomial(15, 4) == 1365


def test_binomial_out_of_range_lower_index():
    """Test that r < 0 and r > n give zero."""
    assert binomial(0, -1) == 0
    assert binomial(7, -3) == 0
    assert binomial(7, 8) == 0
    assert binomial(0, 0) == 1


def test_binomial_rejects_negative_upper_index():
    """Test that a negative upper index is a domain error."""
    with pytest.raises(DomainError, match="upper index"):
        binomial(-1, 0)
    with pytest.raises(ValueError):
        binomial(-5, 2)


def test_binomial_matches_pascal_table():
    """Test every C(n, r) with n ≤ 64 against an addition-only table."""
    table = pascal_table(64)
    for n, row in enumerate(table):
        for r, value in enumerate(row):
            assert binomial(n, r) == value


def test_binomial_symmetry():
    """Test C(n, r) == C(n, n - r)."""
    for n in range(40):
        for r in range(n + 1):
            assert binomial(n, r) == binomial(n, n - r)


def test_binomial_large_values_are_exact():
    """Test values far beyond 64-bit range."""
    assert binomial(200, 100) == pascal_table(200)[200][100]
    assert binomial(1000, 1) == 1000


@pytest.mark.parametrize("n, r", [(7, 2), (0, 0), (9, -1), (12, 13), (30, 15)])
def test_pascal_check(n, r):
    """Test Pascal's rule holds, including the zero conventions."""
    assert pascal_check(n, r)


def test_as_integer():
    """Test integrality assertion on accumulated rationals."""
    assert as_integer(Fraction(12, 4), "test") == 3
    assert as_integer(Fraction(-6, 3), "test") == -2
    with pytest.raises(IntegralityError, match="not an integer"):
        as_integer(Fraction(1, 2), "half")


def test_fraction_sums_stay_reduced():
    """Test rational sums are kept in lowest terms with positive denominator."""
    rng = random.Random(7)
    for _ in range(200):
        a = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        b = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        total = a + b
        assert total.denominator > 0
        assert Fraction(total.numerator, total.denominator) == total
        assert gcd(total.numerator, total.denominator) == 1
