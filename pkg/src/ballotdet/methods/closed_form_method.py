"""Count by the alternating binomial sum."""

from ..closedform import closed_form_D
from ..detkernel import QueryParams


class ClosedFormCounter:
    """Count via the exact-rational closed-form sum."""

    def count(self, params: QueryParams) -> int:
        return closed_form_D(params)
