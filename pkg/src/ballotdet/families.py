"""Classical number families that arise as special cases of D(m, n, u, k).

Each family is computed from its own textbook closed form, never through the
determinant.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Protocol

from .detkernel import QueryParams
from .errors import DomainError, IntegralityError
from .exact import BigInt, as_integer, binomial


def _exact_quotient(numerator: int, denominator: int, context: str) -> BigInt:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise IntegralityError(f"{context}: {numerator}/{denominator} is not an integer")
    return quotient


def catalan(n: int) -> BigInt:
    """C(2n, n)/(n+1), for n ≥ 1."""
    if n < 1:
        raise DomainError(f"catalan needs n ≥ 1 (got n={n})")
    return _exact_quotient(binomial(2 * n, n), n + 1, f"catalan({n})")


def fuss_catalan(n: int, k: int) -> BigInt:
    """C(kn, n)/((k-1)n+1), for n ≥ 1 and k ≥ 2."""
    if n < 1 or k < 2:
        raise DomainError(f"fuss_catalan needs n ≥ 1 and k ≥ 2 (got n={n}, k={k})")
    return _exact_quotient(binomial(k * n, n), (k - 1) * n + 1, f"fuss_catalan({n}, {k})")


def ballot(m: int, n: int) -> BigInt:
    """(m-n+1)/(m+1) C(m+n, n), for m ≥ n ≥ 1."""
    if not m >= n >= 1:
        raise DomainError(f"ballot needs m ≥ n ≥ 1 (got m={m}, n={n})")
    return as_integer(Fraction(m - n + 1, m + 1) * binomial(m + n, n), f"ballot({m}, {n})")


def generalized_ballot(m: int, n: int, k: int) -> BigInt:
    """(m+1-kn)/(m+1) C(m+n, n), for k ≥ 1, n ≥ 1 and m+1 > kn."""
    if k < 1 or n < 1 or m + 1 <= k * n:
        raise DomainError(
            f"generalized_ballot needs k ≥ 1, n ≥ 1, m+1 > kn (got m={m}, n={n}, k={k})"
        )
    return as_integer(
        Fraction(m + 1 - k * n, m + 1) * binomial(m + n, n),
        f"generalized_ballot({m}, {n}, {k})",
    )


class Family(Protocol):
    """A one-parameter sequence indexed by n = 1, 2, ..."""

    def term(self, n: int) -> BigInt:
        """Value from the family's own closed form."""
        ...

    def query(self, n: int) -> QueryParams:
        """Quadruple whose determinant must equal ``term(n)``."""
        ...


class CatalanFamily:
    def term(self, n: int) -> BigInt:
        return catalan(n)

    def query(self, n: int) -> QueryParams:
        return QueryParams(n + 1, n + 1, 0, 2)


@dataclass(frozen=True)
class FussCatalanFamily:
    k: int

    def term(self, n: int) -> BigInt:
        return fuss_catalan(n, self.k)

    def query(self, n: int) -> QueryParams:
        return QueryParams((self.k - 1) * n + 1, n + 1, 0, self.k)


@dataclass(frozen=True)
class BallotFamily:
    m: int

    def term(self, n: int) -> BigInt:
        return ballot(self.m, n)

    def query(self, n: int) -> QueryParams:
        return QueryParams(self.m + 1, n + 1, 0, 2)


@dataclass(frozen=True)
class GeneralizedBallotFamily:
    m: int
    k: int

    def term(self, n: int) -> BigInt:
        return generalized_ballot(self.m, n, self.k)

    def query(self, n: int) -> QueryParams:
        return QueryParams(self.m + 1, n + 1, 0, self.k + 1)


FAMILY_PARAMETERS = {
    "catalan": (),
    "fuss-catalan": ("k",),
    "ballot": ("m",),
    "generalized-ballot": ("m", "k"),
}


@dataclass(frozen=True)
class FamilySpec:
    name: str
    parameters: dict[str, int] = field(default_factory=dict)


def get_family(spec: FamilySpec) -> Family:
    """
    Resolve a family description to a family object.

    Names may use underscores or hyphens (fuss_catalan, fuss-catalan).

    Raises:
        DomainError: If the family is unknown or a required parameter is missing
    """
    name = spec.name.replace("_", "-")
    required = FAMILY_PARAMETERS.get(name)
    if required is None:
        supported = ", ".join(sorted(FAMILY_PARAMETERS))
        raise DomainError(f"Unsupported family: {spec.name}. Supported families: {supported}")

    missing = [key for key in required if spec.parameters.get(key) is None]
    if missing:
        raise DomainError(f"family {name} needs parameter(s): {', '.join(missing)}")

    params = {key: spec.parameters[key] for key in required}
    family_map = {
        "catalan": CatalanFamily,
        "fuss-catalan": FussCatalanFamily,
        "ballot": BallotFamily,
        "generalized-ballot": GeneralizedBallotFamily,
    }
    return family_map[name](**params)


__all__ = [
    "catalan",
    "fuss_catalan",
    "ballot",
    "generalized_ballot",
    "Family",
    "FamilySpec",
    "FAMILY_PARAMETERS",
    "get_family",
]
