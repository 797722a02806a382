"""Count by the grid recurrence."""

from ..detkernel import QueryParams
from ..latticepath import count_paths_dp


class DPCounter:
    """Count by filling the DP table up to (m, n) and reading its corner."""

    def count(self, params: QueryParams) -> int:
        table = count_paths_dp(params.u, params.k, params.m, params.n)
        return table[(params.m, params.n)]
