"""Exception hierarchy shared by every module."""

from __future__ import annotations

__all__ = [
    "HurwitzError",
    "PreconditionError",
    "ResourceLimitError",
    "BoundError",
    "InconsistencyError",
    "InconclusiveFitError",
]


class HurwitzError(Exception):
    """Base class for all library errors."""


class PreconditionError(HurwitzError, ValueError):
    """An input lies outside the domain where the requested quantity is defined."""


class ResourceLimitError(HurwitzError):
    """A computation would exceed its configured work or size bound."""


class BoundError(PreconditionError):
    """A key was requested outside the bounds of a precomputed table."""


class InconsistencyError(HurwitzError):
    """Two independent computations of the same quantity disagreed."""


class InconclusiveFitError(HurwitzError):
    """Finite differences did not vanish within the available samples."""
