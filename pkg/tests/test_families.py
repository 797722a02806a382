"""Tests for the classical families and their determinant specializations."""

import pytest

from ballotdet.closedform import closed_form_D
from ballotdet.detkernel import QueryParams, evaluate_D
from ballotdet.errors import DomainError
from ballotdet.exact import binomial
from ballotdet.families import (
    FAMILY_PARAMETERS,
    FamilySpec,
    ballot,
    catalan,
    fuss_catalan,
    generalized_ballot,
    get_family,
)


def test_catalan_values():
    """Test the first Catalan numbers."""
    assert [catalan(n) for n in range(1, 7)] == [1, 2, 5, 14, 42, 132]


def test_fuss_catalan_values():
    """Test the ternary Fuss-Catalan numbers and the reduction to Catalan at k = 2."""
    assert [fuss_catalan(n, 3) for n in range(1, 6)] == [1, 3, 12, 55, 273]
    for n in range(1, 15):
        assert fuss_catalan(n, 2) == catalan(n)


def test_ballot_values():
    """Test ballot numbers, including the diagonal where they equal Catalan."""
    assert ballot(5, 1) == 5
    assert ballot(3, 2) == 5
    for n in range(1, 12):
        assert ballot(n, n) == catalan(n)


def test_generalized_ballot_values():
    """Test the documented value and the k = 1 reduction to ballot numbers."""
    assert generalized_ballot(10, 4, 2) == 273
    for m in range(1, 10):
        for n in range(1, m + 1):
            assert generalized_ballot(m, n, 1) == ballot(m, n)


@pytest.mark.parametrize(
    "call",
    [
        lambda: catalan(0),
        lambda: fuss_catalan(3, 1),
        lambda: fuss_catalan(0, 3),
        lambda: ballot(2, 3),
        lambda: ballot(3, 0),
        lambda: generalized_ballot(3, 2, 2),
        lambda: generalized_ballot(5, 1, 0),
    ],
)
def test_family_domain_errors(call):
    """Test out-of-range arguments are rejected."""
    with pytest.raises(DomainError):
        call()


def test_large_terms_are_exact():
    """Test terms far beyond 64 bits stay exact."""
    value = catalan(200)
    assert value > 2**300
    assert value * 201 == binomial(400, 200)


@pytest.mark.parametrize(
    "spec, count",
    [
        (FamilySpec("catalan"), 12),
        (FamilySpec("fuss-catalan", {"k": 3}), 8),
        (FamilySpec("fuss-catalan", {"k": 5}), 6),
        (FamilySpec("ballot", {"m": 9}), 9),
        (FamilySpec("generalized-ballot", {"m": 20, "k": 2}), 6),
        (FamilySpec("generalized-ballot", {"m": 30, "k": 4}), 7),
    ],
)
def test_family_terms_equal_determinant(spec, count):
    """Test every family term equals D at its specialization."""
    family = get_family(spec)
    for n in range(1, count + 1):
        assert family.term(n) == evaluate_D(family.query(n))


def test_family_queries():
    """Test the specializations used for each family."""
    assert get_family(FamilySpec("catalan")).query(3) == QueryParams(4, 4, 0, 2)
    assert get_family(FamilySpec("fuss-catalan", {"k": 3})).query(5) == QueryParams(11, 6, 0, 3)
    assert get_family(FamilySpec("ballot", {"m": 5})).query(1) == QueryParams(6, 2, 0, 2)
    assert get_family(FamilySpec("generalized-ballot", {"m": 10, "k": 2})).query(4) == QueryParams(11, 5, 0, 3)


def test_get_family_unknown():
    """Test an unknown family lists the supported ones."""
    with pytest.raises(DomainError, match="Unsupported family: motzkin"):
        get_family(FamilySpec("motzkin"))


def test_get_family_missing_parameter():
    """Test a missing parameter is named."""
    with pytest.raises(DomainError, match="needs parameter"):
        get_family(FamilySpec("fuss-catalan", {"k": None}))
    with pytest.raises(DomainError, match="m, k"):
        get_family(FamilySpec("generalized-ballot"))


def test_get_family_ignores_unused_parameters():
    """Test extra parameters do not leak into parameterless families."""
    family = get_family(FamilySpec("catalan", {"k": 7, "m": None}))
    assert family.term(4) == 14
    assert set(FAMILY_PARAMETERS) == {"catalan", "fuss-catalan", "ballot", "generalized-ballot"}


def test_documented_family_values():
    """Test single values from the closed forms."""
    assert catalan(9) == 4862
    assert fuss_catalan(3, 3) == 12
    assert fuss_catalan(1, 5) == 1
    assert ballot(1, 1) == 1
    assert ballot(5, 2) == 14
    assert generalized_ballot(6, 3, 2) == 12


def test_catalan_equals_both_determinant_forms():
    """Test catalan(n) against the determinant and the closed-form sum for n ≤ 10."""
    for n in range(1, 11):
        p = QueryParams(n + 1, n + 1, 0, 2)
        assert catalan(n) == evaluate_D(p) == closed_form_D(p)


def test_fuss_catalan_grid():
    """Test fuss_catalan(n, k) for 1 ≤ n ≤ 6, 2 ≤ k ≤ 5."""
    for k in range(2, 6):
        for n in range(1, 7):
            assert fuss_catalan(n, k) == evaluate_D(QueryParams((k - 1) * n + 1, n + 1, 0, k))


def test_ballot_grid():
    """Test ballot(m, n) for 1 ≤ n ≤ m ≤ 10."""
    for m in range(1, 11):
        for n in range(1, m + 1):
            assert ballot(m, n) == evaluate_D(QueryParams(m + 1, n + 1, 0, 2))


def test_generalized_ballot_sweep():
    """Test generalized_ballot(m, n, k) wherever m + 1 > kn on a small box."""
    for k in range(1, 5):
        for n in range(1, 6):
            for m in range(k * n, k * n + 6):
                assert generalized_ballot(m, n, k) == evaluate_D(QueryParams(m + 1, n + 1, 0, k + 1))


def test_get_family_accepts_underscores():
    """Test underscore spellings resolve to the same family."""
    family = get_family(FamilySpec("fuss_catalan", {"k": 3}))
    assert family.term(5) == 273
    assert get_family(FamilySpec("generalized_ballot", {"m": 10, "k": 2})).term(4) == 273
