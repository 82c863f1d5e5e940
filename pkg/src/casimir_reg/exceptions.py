"""Exception types raised across the package."""


class CasimirError(Exception):
    """Base class for all package errors."""


class InvalidArgument(CasimirError, ValueError):
    """An argument lies outside the domain of an operation."""


class BoundarySingularityError(CasimirError, ValueError):
    """A density was requested inside the guard band around a plate.

    The divergence there is physical, so callers are expected to branch on
    this rather than receive an infinity.
    """

    def __init__(self, theta, guard, endpoint):
        self.theta = theta
        self.guard = guard
        self.endpoint = endpoint
        name = "theta=0" if endpoint == 0 else "theta=pi"
        super().__init__(
            f"theta={theta!r} lies within guard {guard!r} of the endpoint {name}"
        )


class FitFailure(CasimirError, ArithmeticError):
    """Least-squares extrapolation was rank deficient or ill conditioned."""

    def __init__(self, message, condition=None):
        self.condition = condition
        super().__init__(message)


class UnsupportedSystem(InvalidArgument):
    """The requested system has no implementation for this operation."""


class ConfigError(InvalidArgument):
    """A configuration value is missing, malformed or out of range."""

    def __init__(self, key, message):
        self.key = key
        super().__init__(f"{key}: {message}")
