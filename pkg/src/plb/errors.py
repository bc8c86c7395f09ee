"""Exception hierarchy shared by all plb modules."""


class PlbError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(PlbError, ValueError):
    """An input violates a documented precondition.

    The message names the offending field.
    """


class BracketError(PlbError):
    """A root-finding bracket does not contain a sign change."""


class ConvergenceError(PlbError):
    """An iterative scheme failed to reach its tolerance in budget.

    May carry the last iterate via the ``result`` attribute.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class DivergenceError(PlbError):
    """An integrand fails the integrability check (exponent <= -1)."""


class NumericError(PlbError):
    """An internal numerical consistency check failed."""
