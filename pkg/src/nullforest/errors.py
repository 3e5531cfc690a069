"""Exception hierarchy for the nullforest package."""


class NullForestError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(NullForestError):
    """Malformed input text (forest files, basis files)."""


class SelfLoopError(NullForestError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(NullForestError):
    """The same undirected edge appears more than once."""


class CycleError(NullForestError):
    """A connected component carries at least as many edges as vertices."""


class InvalidRootError(NullForestError):
    """Root selection does not match the component structure."""


class NotMaximumError(NullForestError):
    """A matching required to be maximum admits an augmenting path."""


class SizeLimitError(NullForestError):
    """Instance exceeds the size cap of an exhaustive oracle routine."""


class NotInSupportError(NullForestError):
    """Queried vertex is zero in every null vector."""


class InvalidSpecError(NullForestError):
    """Generator specification fails validation."""


class InternalError(NullForestError):
    """Invariant violation that indicates a bug, not bad input."""
