"""Exception types shared across the library."""


class ProjconstError(Exception):
    """Base class for library errors."""


class DomainError(ProjconstError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ToleranceError(ProjconstError):
    """A quadrature failed to meet the requested tolerance.

    Carries the best value and the achieved error estimate so callers can
    decide whether the result is still usable.
    """

    def __init__(self, message, value, achieved):
        super().__init__(message)
        self.value = value
        self.achieved = achieved


class ConvergenceError(ProjconstError):
    """Iterative root polishing failed to converge."""


class UnsupportedCombinationError(ProjconstError, ValueError):
    """The requested (family, n, d, ...) combination has no formula here."""
