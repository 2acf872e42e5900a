"""Exception types shared across the package."""


class CasimirToyError(Exception):
    """Base class for all package errors."""


class NonPositiveParameterError(CasimirToyError):
    """A parameter that must be strictly positive is not."""


class ConstraintViolationError(CasimirToyError):
    """A model invariant (e.g. sup g(y) < k) is violated."""


class DomainError(CasimirToyError):
    """Coordinate evaluated outside the declared coupling domain."""


class InvalidRatioError(CasimirToyError):
    """|beta/alpha| >= 1 in the squeezed-vacuum expansion."""


class TruncationMismatchError(CasimirToyError):
    """Expansion order exceeds the Fock basis cutoff."""


class NoConvergenceError(CasimirToyError):
    """Eigensolver failed to converge."""


class EmptyTrajectoryError(CasimirToyError):
    """Audit requested on a trajectory with no rows."""


class NonPositiveSeparationError(CasimirToyError):
    """Plate separation must be strictly positive."""


class ConfigError(CasimirToyError):
    """Malformed or inconsistent run configuration."""
