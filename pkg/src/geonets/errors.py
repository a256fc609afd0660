"""Exception types shared across the package."""


class GeonetsError(Exception):
    """Base class for all package errors."""


class InvalidInputError(GeonetsError, ValueError):
    """An argument violates a documented precondition."""


class InvalidStateError(GeonetsError, RuntimeError):
    """An operation was invoked on an object in the wrong state."""


class NumericalError(GeonetsError, ArithmeticError):
    """A numerical procedure failed; the message carries step diagnostics."""


class ConvergenceError(GeonetsError, RuntimeError):
    """An iteration hit its budget without converging.

    The last iterate is attached as ``last`` so callers can inspect or
    resume from it.
    """

    def __init__(self, message, last=None):
        super().__init__(message)
        self.last = last


class ConfigError(GeonetsError, ValueError):
    """An experiment config failed validation.

    ``problems`` lists every issue found, not just the first.
    """

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("invalid config:\n" + "\n".join(f"  - {p}" for p in self.problems))
