"""Exception hierarchy shared by every module of the package."""


class LeavittError(Exception):
    """Base class for all errors raised by :mod:`leavitt`."""


class GraphError(LeavittError, ValueError):
    """A graph description is malformed (unknown vertex, duplicate id, ...)."""


class CyclicGraph(LeavittError):
    """An operation needing a finite acyclic graph received a cyclic one."""


class NotAcyclic(LeavittError):
    """A family-level predicate was asked about a family containing cycles."""


class InfiniteDimensional(LeavittError):
    """The Leavitt path algebra has no finite basis (the graph has a cycle)."""


class GraphMismatch(LeavittError):
    """Elements living in different algebras were combined."""


class NotSemisimpleShape(LeavittError):
    """The family does not decompose as a direct sum of matrix algebras."""


class WitnessSearchFailed(LeavittError):
    """A regularity witness failed its own check. Indicates a bug."""


class BoundedFamily(LeavittError):
    """The strong pi-regularity witness needs unbounded block sizes."""


class DSLError(LeavittError):
    """Base class for errors from the graph and element parsers."""


class DSLSyntaxError(DSLError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class SemanticError(DSLError):
    """Parsed text refers to unknown ids, repeats ids, or violates a constraint."""
