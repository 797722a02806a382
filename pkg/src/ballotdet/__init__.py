"""Exact evaluation and cross-validation of a determinant generalizing ballot and Fuss-Catalan numbers."""

import time

from loguru import logger

from .detkernel import QueryParams, evaluate_D
from .errors import BallotDetError, DomainError, IntegralityError, InternalError, SizeError
from .latticepath import DEFAULT_CAP
from .methods import METHOD_NAMES, CountResult, get_method


def count(
    m: int,
    n: int,
    u: int,
    k: int,
    method: str = "det",
    brute_cap: int = DEFAULT_CAP,
) -> CountResult:
    """
    Count the lattice paths from (u+1, 1) to (m, n) below y = (x-1)/(k-1) + 1.

    The count equals the determinant D(m, n, u, k); every method returns the
    same exact integer.

    Args:
        m: End column, m ≥ max{u+1, (k-1)(n-1)}
        n: End row, n ≥ 2
        u: Start offset, u ≥ 0
        k: Slope parameter, k ≥ 2
        method: "det" (determinant), "sum" (closed form), "dp" (grid
               recurrence) or "brute" (enumeration)
        brute_cap: Largest m + n accepted by the brute method

    Returns:
        CountResult tagged with the method and the elapsed milliseconds

    Raises:
        DomainError: If the quadruple or the method name is invalid
        SizeError: If brute force is requested beyond ``brute_cap``

    Examples:
        >>> count(11, 5, 1, 3).value
        273

        >>> count(11, 5, 1, 3, method="brute").value
        273
    """
    counter = get_method(method, brute_cap=brute_cap)
    try:
        params = QueryParams(m, n, u, k)
    except DomainError as e:
        logger.error(f"Invalid parameters: {e}")
        raise

    logger.info(f"Counting {params} with method {method}")
    started = time.perf_counter()
    value = counter.count(params)
    elapsed = (time.perf_counter() - started) * 1000
    logger.success(f"{method}: {value} ({elapsed:.2f} ms)")

    return CountResult(params, method, value, elapsed)


__all__ = [
    "count",
    "evaluate_D",
    "QueryParams",
    "CountResult",
    "METHOD_NAMES",
    "BallotDetError",
    "DomainError",
    "IntegralityError",
    "InternalError",
    "SizeError",
]
