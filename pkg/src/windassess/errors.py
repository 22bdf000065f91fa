"""Exception hierarchy shared by every module in the package."""


class WindAssessError(Exception):
    """Base class for all package errors."""


class DomainError(WindAssessError, ValueError):
    """An argument lies outside the domain of the function."""


class InsufficientDataError(WindAssessError, ValueError):
    """Too few usable observations for the requested computation."""


class DegenerateDataError(WindAssessError, ValueError):
    """The data cannot identify the model (e.g. all speeds identical)."""


class ConvergenceError(WindAssessError, ArithmeticError):
    """An iterative solver ran out of iterations.

    ``last_iterate`` holds the final estimate so callers can inspect it.
    """

    def __init__(self, message, last_iterate=None):
        super().__init__(message)
        self.last_iterate = last_iterate


class AccuracyError(WindAssessError, ArithmeticError):
    """A quadrature failed to meet its tolerance. ``estimate`` is the best value reached."""

    def __init__(self, message, estimate=None, error_estimate=None):
        super().__init__(message)
        self.estimate = estimate
        self.error_estimate = error_estimate


class SchemaError(WindAssessError, ValueError):
    """An input file does not follow the expected layout."""


class UsageError(WindAssessError, ValueError):
    """Invalid combination of options supplied by the caller."""
