"""Count by listing every admissible path."""

from ..detkernel import QueryParams
from ..errors import SizeError
from ..latticepath import DEFAULT_CAP, enumerate_paths, l_query


class BruteForceCounter:
    """Count by exhaustive enumeration; refuses instances with m + n above the cap."""

    def __init__(self, cap: int = DEFAULT_CAP):
        self.cap = cap

    def count(self, params: QueryParams) -> int:
        """
        Enumerate L(u+1,1;m,n;k) and return its size.

        Raises:
            SizeError: If m + n exceeds the cap
        """
        if params.m + params.n > self.cap:
            raise SizeError(
                f"brute force needs m+n ≤ {self.cap} (got m+n={params.m + params.n})"
            )
        return len(enumerate_paths(l_query(params), cap=self.cap))
