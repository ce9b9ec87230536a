"""Exception hierarchy. Everything raised on bad domain input derives from
:class:`CentDistError`, which the CLI maps to exit code 2."""


class CentDistError(Exception):
    pass


class InapplicableEdit(CentDistError):
    pass


class InvalidSize(CentDistError, ValueError):
    pass


class NotNeighbors(CentDistError):
    pass


class NotNested(CentDistError):
    pass


class UniverseTooLarge(CentDistError):
    pass


class VertexOutsideUniverse(CentDistError):
    pass


class VertexMismatch(CentDistError):
    pass


class NonPositiveWeight(CentDistError):
    pass


class RadiusTooLarge(CentDistError):
    pass


class EmptyVertexSet(CentDistError):
    pass


class TooFewTimesteps(CentDistError):
    pass


class NoUsableRecords(CentDistError):
    pass


class EmptyTrace(CentDistError):
    pass


class NonMonotoneTimestamps(CentDistError):
    pass


class ParseError(CentDistError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class SelfLoop(ParseError):
    pass


class DuplicateEdge(ParseError):
    pass
