"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PoleProximityError(DomainError):
    """An evaluation point is too close to a pole to be meaningful."""


class ConvergenceError(RuntimeError):
    """An iterative computation failed to reach its tolerance.

    The best available estimate, when one exists, is attached as
    ``best_estimate``.
    """

    def __init__(self, message, best_estimate=None):
        super().__init__(message)
        self.best_estimate = best_estimate


class QuadratureError(ConvergenceError):
    """Adaptive integration could not certify the requested tolerance."""


class BracketingError(RuntimeError):
    """A root finder could not bracket a sign change on the search interval."""
