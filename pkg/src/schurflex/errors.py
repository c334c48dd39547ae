class SchurFlexError(Exception):
    pass


class InvalidInput(SchurFlexError, ValueError):
    """Rejected input: bad family/rank/node, non-ideal root set, malformed partition, ..."""


class ExtremalClassError(InvalidInput):
    """The operation is undefined for the point class and the fundamental class."""


class ConsistencyError(SchurFlexError, AssertionError):
    """An internal invariant failed.  Always a bug, never a user error."""
