"""Counting-method registry and result type."""

from dataclasses import dataclass
from typing import Optional, Protocol

from ..detkernel import QueryParams
from ..errors import DomainError
from ..exact import BigInt


class Counter(Protocol):
    """Protocol for the independent ways of computing |L(u+1,1;m,n;k)|."""

    def count(self, params: QueryParams) -> BigInt:
        """Return the exact count for ``params``."""
        ...


@dataclass(frozen=True)
class CountResult:
    """An exact count tagged with the method that produced it."""

    params: QueryParams
    method: str
    value: BigInt
    elapsed: float = 0.0  # milliseconds

    def to_dict(self) -> dict:
        return {
            "m": self.params.m,
            "n": self.params.n,
            "u": self.params.u,
            "k": self.params.k,
            "method": self.method,
            "value": str(self.value),
        }


METHOD_NAMES = ("det", "sum", "dp", "brute")


def get_method(name: str, brute_cap: Optional[int] = None) -> Counter:
    """
    Get the counter registered under ``name``.

    Args:
        name: One of det, sum, dp, brute
        brute_cap: Enumeration cap for the brute method (None keeps the default)

    Returns:
        Counter instance

    Raises:
        DomainError: If the method name is not registered
    """
    from . import brute_method, closed_form_method, determinant_method, dp_method

    method_map = {
        "det": determinant_method.DeterminantCounter,
        "sum": closed_form_method.ClosedFormCounter,
        "dp": dp_method.DPCounter,
        "brute": brute_method.BruteForceCounter,
    }

    counter_class = method_map.get(name)

    if counter_class is None:
        supported = ", ".join(METHOD_NAMES)
        raise DomainError(f"Unsupported method: {name}. Supported methods: {supported}")

    if counter_class is brute_method.BruteForceCounter and brute_cap is not None:
        return counter_class(cap=brute_cap)
    return counter_class()


__all__ = ["Counter", "CountResult", "METHOD_NAMES", "get_method"]
