"""Exception types shared across the package.

Every error raised on purpose derives from TreecastError so callers (and the
CLI) can map failure classes to exit codes without matching on messages.
"""


class TreecastError(Exception):
    """Base class for all errors raised by this package."""


class NotATreeError(TreecastError):
    """Edge list does not describe a single connected acyclic graph."""


class VertexOutOfRangeError(TreecastError):
    """A vertex id falls outside 0..n-1."""


class ParseError(TreecastError):
    """Malformed edge-list text or JSON payload."""


class BadParamError(TreecastError):
    """Family or formula parameters outside their domain (e.g. k < 2)."""


class UnsupportedRangeError(TreecastError):
    """Parameters are legal for the family but no closed form covers them."""


class IsCaterpillarError(TreecastError):
    """Operation requires a non-caterpillar instance; caller should route to
    the caterpillar rule instead."""


class NotACaterpillarError(TreecastError):
    """Operation requires a caterpillar instance."""


class TooLargeError(TreecastError):
    """Instance exceeds an exhaustive-search size limit."""


class InvalidBroadcastError(TreecastError):
    """Broadcast assignment is ill-formed (wrong length, negative power, or a
    power above the vertex eccentricity)."""
