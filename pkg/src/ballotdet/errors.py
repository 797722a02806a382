"""Exception types raised by ballotdet."""


class BallotDetError(Exception):
    """Base class for all ballotdet errors."""


class DomainError(BallotDetError, ValueError):
    """Parameters fall outside the domain where a quantity is defined."""


class SizeError(BallotDetError, ValueError):
    """A brute-force request exceeds the configured enumeration cap."""


class IntegralityError(BallotDetError, ArithmeticError):
    """A rational sum that must be an integer was not."""


class InternalError(BallotDetError, RuntimeError):
    """An arithmetic invariant broke; indicates a bug, not bad input."""


__all__ = [
    "BallotDetError",
    "DomainError",
    "SizeError",
    "IntegralityError",
    "InternalError",
]
