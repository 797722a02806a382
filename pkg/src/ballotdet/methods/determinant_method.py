"""Count by evaluating the binomial determinant."""

from ..detkernel import QueryParams, evaluate_D


class DeterminantCounter:
    """Count via fraction-free elimination of the binomial matrix."""

    def count(self, params: QueryParams) -> int:
        return evaluate_D(params)
