"""Exception hierarchy for chiralgebra."""


class ChiralityError(Exception):
    """Base class for all library errors."""


class ConsistencyError(ChiralityError):
    """An internal algebraic identity failed. Should never be raised."""


class StructureError(ChiralityError):
    """A molecule or tetrahedron has an invalid link structure."""


class StateError(ChiralityError):
    """An operation needs data the object does not carry (e.g. bond geometry)."""


class InvariantViolation(ChiralityError, ValueError):
    """A value violates a declared invariant such as 0 <= p <= n."""


class ParseError(ChiralityError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
