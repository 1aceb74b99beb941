"""Shared exception types.

Every operation that has stated hypotheses raises ``DomainError`` (naming the
violated condition) instead of returning a junk value; geometric degeneracies
get their own subclass so callers can distinguish them.
"""


class DomainError(ValueError):
    """An input is outside the hypotheses an operation is defined for."""


class DegenerateWallError(DomainError):
    """The two numerical classes do not span a wall (proportional data)."""


class RegionError(DomainError):
    """A chain-search region is malformed (wrong endpoints or unbounded)."""
