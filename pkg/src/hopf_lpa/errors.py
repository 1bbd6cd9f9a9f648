"""Exception hierarchy shared by every module of the package."""


class HopfError(Exception):
    """Base class. ``position`` is a character offset into ``source`` when the
    error comes from parsing user text; the CLI turns it into a caret line."""

    exit_code = 2

    def __init__(self, message, *, source=None, position=None):
        super().__init__(message)
        self.message = message
        self.source = source
        self.position = position

    def caret(self):
        if self.source is None or self.position is None:
            return None
        return f"{self.source}\n{' ' * self.position}^"


class InvalidSpec(HopfError):
    pass


class InvalidTable(HopfError):
    pass


class SizeLimit(HopfError):
    exit_code = 3


class UnknownElement(HopfError):
    pass


class ConflictingMultiplicity(HopfError):
    pass


class NegativeMultiplicity(HopfError):
    pass


class InfiniteSupport(HopfError):
    pass


class NotASubgroup(HopfError):
    pass


class NotApplicable(HopfError):
    pass


class EmptyGraph(HopfError):
    pass


class MissingWindow(HopfError):
    pass


class SkippedNonCommutative(HopfError):
    pass
