"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed textual input. Carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ValidationError(ValueError):
    """Well-formed input that violates a documented precondition."""


class DisconnectedGraphError(ValidationError):
    """An operation that needs a connected graph got a disconnected one.

    Carries a concrete pair of mutually unreachable vertices as evidence.
    """

    def __init__(self, u, v):
        super().__init__(f"graph is disconnected: no path between {u} and {v}")
        self.unreachable_pair = (u, v)


class GenerationError(RuntimeError):
    """A generator spec could not be realized (bad family or parameters)."""


class InternalCheckError(RuntimeError):
    """A must-hold invariant failed; this signals a bug in the package itself."""
