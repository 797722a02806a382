"""Explicit alternating-sum formulas.

Three sums are evaluated here with exact rational accumulation:

* ``closed_form_D``: D(m, n, u, k) as a sum over i ≤ ⌊u/k⌋.
* ``count_above_line``: paths from (a, b) to (m, n) weakly above y = kx.
* ``count_below_line``: paths from (a, b) to (m, n) weakly below y = x/k,
  the diagonal reflection of the previous sum.

Individual terms need not be integers; only the total is checked.
"""

from dataclasses import dataclass
from fractions import Fraction

from loguru import logger

from .detkernel import QueryParams
from .errors import DomainError, InternalError
from .exact import BigInt, as_integer, binomial


@dataclass(frozen=True)
class AboveLineQuery:
    """Paths from (a, b) to (m, n) staying weakly above y = kx."""

    a: int
    b: int
    m: int
    n: int
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise DomainError(f"k must be ≥ 1 (got k={self.k})")
        if not 0 <= self.a <= self.m:
            raise DomainError(f"need 0 ≤ a ≤ m (got a={self.a}, m={self.m})")
        if not self.k * self.a <= self.b <= self.n:
            raise DomainError(f"need ka ≤ b ≤ n (got a={self.a}, b={self.b}, n={self.n})")
        if self.n < self.k * self.m:
            raise DomainError(f"need n ≥ km (got n={self.n}, m={self.m}, k={self.k})")

    def reflected(self) -> "BelowLineQuery":
        """The query seen through the diagonal y = x."""
        return BelowLineQuery(self.b, self.a, self.n, self.m, self.k)


@dataclass(frozen=True)
class BelowLineQuery:
    """Paths from (a, b) to (m, n) staying weakly below y = x/k."""

    a: int
    b: int
    m: int
    n: int
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise DomainError(f"k must be ≥ 1 (got k={self.k})")
        if not 0 <= self.b <= self.n:
            raise DomainError(f"need 0 ≤ b ≤ n (got b={self.b}, n={self.n})")
        if not self.k * self.b <= self.a <= self.m:
            raise DomainError(f"need kb ≤ a ≤ m (got a={self.a}, b={self.b}, m={self.m})")
        if self.n < 1:
            raise DomainError(f"n must be ≥ 1 (got n={self.n})")
        if self.m < self.k * self.n:
            raise DomainError(f"need m ≥ kn (got m={self.m}, n={self.n}, k={self.k})")

    def reflected(self) -> AboveLineQuery:
        return AboveLineQuery(self.b, self.a, self.n, self.m, self.k)


def _positive_denominator(value: int, context: str) -> int:
    if value <= 0:
        raise InternalError(f"non-positive denominator {value} in {context}")
    return value


def closed_form_D(p: QueryParams) -> BigInt:
    """
    Evaluate D(m, n, u, k) by its alternating binomial sum.

    Sum over 0 ≤ i ≤ ⌊u/k⌋ of
    (-1)^i (m-(k-1)(n-1))/(m+n-1-ki) C(m+n-1-ki, n-1-i) C(u-(k-1)i, i).

    Raises:
        IntegralityError: If the total has a denominator other than 1
    """
    m, n, u, k = p.m, p.n, p.u, p.k
    numerator = m - (k - 1) * (n - 1)
    total = Fraction(0)

    for i in range(u // k + 1):
        top = m + n - 1 - k * i
        if top < 2:
            raise InternalError(f"summation index {i} reached m+n-1-ki={top} for {p}")
        term = Fraction(numerator, top) * binomial(top, n - 1 - i) * binomial(u - (k - 1) * i, i)
        total += -term if i % 2 else term

    value = as_integer(total, f"closed-form D{p}")
    logger.debug(f"closed-form D{p} = {value}")
    return value


def count_above_line(q: AboveLineQuery) -> BigInt:
    """
    Count lattice paths from (a, b) to (m, n) weakly above y = kx.

    Raises:
        IntegralityError: If the total has a denominator other than 1
    """
    a, b, m, n, k = q.a, q.b, q.m, q.n, q.k
    numerator = n + 1 - k * m
    total = Fraction(0)

    for i in range((b - k * a) // (k + 1) + 1):
        shift = a + i
        denominator = _positive_denominator(n + 1 - k * shift, f"{q}")
        term = (
            Fraction(numerator, denominator)
            * binomial(m + n - (k + 1) * shift, m - shift)
            * binomial(b - k * shift, i)
        )
        total += -term if i % 2 else term

    return as_integer(total, f"above-line count {q}")


def count_below_line(q: BelowLineQuery) -> BigInt:
    """
    Count lattice paths from (a, b) to (m, n) weakly below y = x/k.

    Evaluated from its own sum, independently of ``count_above_line``.

    Raises:
        IntegralityError: If the total has a denominator other than 1
    """
    a, b, m, n, k = q.a, q.b, q.m, q.n, q.k
    numerator = m + 1 - k * n
    total = Fraction(0)

    for i in range((a - k * b) // (k + 1) + 1):
        shift = b + i
        denominator = _positive_denominator(m + 1 - k * shift, f"{q}")
        term = (
            Fraction(numerator, denominator)
            * binomial(m + n - (k + 1) * shift, n - shift)
            * binomial(a - k * shift, i)
        )
        total += -term if i % 2 else term

    return as_integer(total, f"below-line count {q}")


def shifted_below_query(p: QueryParams) -> BelowLineQuery:
    """
    The below-line query that counts L(u+1,1;m,n;k) after the unit shift.

    Raises:
        DomainError: On the zero line m = (k-1)(n-1), where the reflected
            formula's domain m-1 ≥ (k-1)(n-1) does not hold
    """
    return BelowLineQuery(p.u, 0, p.m - 1, p.n - 1, p.k - 1)


__all__ = [
    "AboveLineQuery",
    "BelowLineQuery",
    "closed_form_D",
    "count_above_line",
    "count_below_line",
    "shifted_below_query",
]
