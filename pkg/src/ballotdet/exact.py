"""Exact integer and rational arithmetic shared by every counting method.

Python integers and ``fractions.Fraction`` serve as the big-integer and
big-rational types. Fractions stay in lowest terms with a positive denominator.
"""

from fractions import Fraction

from .errors import DomainError, IntegralityError

BigInt = int
BigRational = Fraction


def binomial(n: int, r: int) -> BigInt:
    """
    Return the binomial coefficient C(n, r).

    Uses the multiplicative formula with an exact division at every step, so
    each intermediate value is itself a binomial coefficient.

    Args:
        n: Upper index, must be non-negative
        r: Lower index, any integer

    Returns:
        C(n, r), or 0 when r < 0 or r > n

    Raises:
        DomainError: If n is negative
    """
    if n < 0:
        raise DomainError(f"binomial upper index must be ≥ 0 (got n={n})")
    if r < 0 or r > n:
        return 0

    r = min(r, n - r)
    result = 1
    for i in range(1, r + 1):
        # result == C(n - r + i - 1, i - 1) before this step
        result = result * (n - r + i) // i
    return result


def pascal_check(n: int, r: int) -> bool:
    """Check C(n, r) + C(n, r-1) == C(n+1, r)."""
    return binomial(n, r) + binomial(n, r - 1) == binomial(n + 1, r)


def as_integer(value: BigRational, context: str) -> BigInt:
    """
    Return ``value`` as an int, asserting it has denominator 1.

    Args:
        value: Accumulated rational result
        context: Description of the computation, used in the error message

    Raises:
        IntegralityError: If the denominator is not 1
    """
    if value.denominator != 1:
        raise IntegralityError(f"{context} is not an integer: {value}")
    return value.numerator


__all__ = ["BigInt", "BigRational", "binomial", "pascal_check", "as_integer"]
