"""Exception hierarchy."""


class RelMatroidError(Exception):
    """Base class for all library errors."""


class DomainError(RelMatroidError, ValueError):
    """An element or subset does not belong to the expected universe."""


class PreconditionError(RelMatroidError, ValueError):
    """An input lacks a property the operation requires."""


class CapacityError(RelMatroidError, ValueError):
    """The universe is too large for an exhaustive computation."""


class LoadError(RelMatroidError, ValueError):
    """A JSON document could not be turned into a relation or matroid."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = str(path) + (f":{line}" if line is not None else "") + ": "
        super().__init__(where + message)


class InvariantViolation(RelMatroidError, AssertionError):
    """A proven identity failed to hold; this signals a bug, not bad input."""
