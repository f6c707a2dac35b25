"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class PreconditionError(ValueError):
    """Structural precondition violated (bad bracket, length mismatch, ...)."""


class ConvergenceError(RuntimeError):
    """An iterative scheme did not reach its tolerance within the cap.

    Carries the last bracket when the scheme is a bracketed search.
    """

    def __init__(self, message, bracket=None):
        super().__init__(message)
        self.bracket = bracket


class BoundaryUndecidableError(RuntimeError):
    """Integrability sits on the convergence boundary; no decision is made."""


class ConfigError(ValueError):
    """Invalid run configuration (unknown check name, bad flag value, ...)."""
