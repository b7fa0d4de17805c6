from __future__ import annotations

__all__ = [
    "OmentangleError",
    "InvalidArgumentError",
    "InvalidStateError",
    "SingularMeasurementError",
    "RootNotFoundError",
    "SingularInversionError",
]


class OmentangleError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgumentError(OmentangleError, ValueError):
    """An argument is out of range, non-finite or inconsistent with the others."""


class InvalidStateError(OmentangleError, ValueError):
    """A covariance matrix violates the uncertainty principle or has a non-positive determinant."""


class SingularMeasurementError(OmentangleError, ArithmeticError):
    """The measured quadrature has vanishing variance, so conditioning is undefined."""


class RootNotFoundError(OmentangleError, ArithmeticError):
    """A root search bracket does not contain a sign change."""


class SingularInversionError(OmentangleError, ArithmeticError):
    """A decoherence map cannot be inverted because a gain factor vanishes."""
