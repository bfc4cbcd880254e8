class InducedPathsError(Exception):
    """Base class for package errors."""


class DomainViolation(InducedPathsError, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class SubcriticalError(InducedPathsError, ValueError):
    """The degree distribution has no giant component, so the requested
    fixed point or bound does not exist."""


class NumericalError(InducedPathsError, RuntimeError):
    """A solver or quadrature failed to reach its target tolerance."""


class ConfigError(InducedPathsError, ValueError):
    """Invalid experiment configuration."""
