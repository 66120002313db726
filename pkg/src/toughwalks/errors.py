"""Exception hierarchy shared by all toughwalks modules."""

from __future__ import annotations


class ToughwalksError(Exception):
    """Base class for every error raised by this package."""


class PreconditionViolated(ToughwalksError, ValueError):
    pass


class NotConnected(PreconditionViolated):
    pass


class Not2K2Free(PreconditionViolated):
    """The input contains an induced 2K2; ``witness`` holds the two edges."""

    def __init__(self, witness, message: str | None = None):
        self.witness = witness
        super().__init__(message or f"graph is not 2K2-free: induced 2K2 {witness}")


class NotATriangle(PreconditionViolated):
    pass


class InvalidWitness(PreconditionViolated):
    pass


class NotDominating(InvalidWitness):
    pass


class OddCycle(PreconditionViolated):
    pass


class EvenCycle(PreconditionViolated):
    pass


class TriangleMissing(PreconditionViolated):
    pass


class KTooSmall(PreconditionViolated):
    pass


class NoNeighborInWitness(InvalidWitness):
    pass


class BudgetExceeded(ToughwalksError):
    """An exponential search ran past its node or size budget."""


class ParseError(ToughwalksError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateEdge(ParseError):
    pass


class SelfLoop(ParseError):
    pass


class VertexOutOfRange(ParseError):
    pass
