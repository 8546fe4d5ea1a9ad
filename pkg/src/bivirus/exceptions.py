"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input violates a documented precondition (sign, shape, structure)."""


class ValidationError(ValueError):
    """A candidate system failed validation.

    Carries the full list of violations so callers can report every
    problem at once instead of the first one hit.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class ConvergenceError(RuntimeError):
    """An iterative solver hit its iteration cap.

    `estimate` and `iterate` hold the last value/vector produced, so a
    caller can inspect how far the iteration got.
    """

    def __init__(self, message, estimate=None, iterate=None):
        super().__init__(message)
        self.estimate = estimate
        self.iterate = iterate


class IntegrationError(RuntimeError):
    """The ODE integrator aborted (step underflow or invariant breach)."""

    def __init__(self, message, t=None, state=None):
        super().__init__(message)
        self.t = t
        self.state = state
