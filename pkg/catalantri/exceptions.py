"""
Error hierarchy for catalantri.
Every error raised on purpose by the package derives from CatalanError.
"""


class CatalanError(ValueError):
    """Base class for catalantri errors."""


class DomainError(CatalanError):
    """An argument lies outside the domain of an operation."""


class InexactDivisionError(CatalanError, ArithmeticError):
    """An exact division was requested but the divisor does not divide."""


class UnknownIdentityError(CatalanError, KeyError):
    """No identity is registered under the requested id."""

    def __str__(self) -> str:
        return self.args[0] if self.args else "unknown identity"


class PathError(CatalanError):
    """A lattice path is malformed or fails a membership predicate."""


class SeriesError(CatalanError):
    """A power series operation went beyond its truncation order."""


class ConfigurationError(CatalanError):
    """The environment configuration is invalid."""
