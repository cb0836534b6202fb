"""Exception hierarchy shared across the package.

CLI exit codes: parse errors map to 2, infeasible inputs to 3, internal
assertion failures (violated planner guarantees) to 4, validation
failures to 1.
"""


class CubeplanError(Exception):
    pass


class ParseError(CubeplanError):
    """Malformed .cfg / .trace text."""


class MalformedMoveError(CubeplanError):
    """A move object whose fields do not describe a rotation or slide."""


class IllegalMoveError(CubeplanError):
    """A well-formed move that is not legal in the given configuration."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class TraceError(CubeplanError):
    """Replay failure; carries the index of the first offending move.

    kind is one of "malformed", "illegal-geometry", "disconnected".
    An index of -1 refers to the initial configuration.
    """

    def __init__(self, index: int, kind: str, message: str = ""):
        super().__init__(f"move {index}: {kind}" + (f" ({message})" if message else ""))
        self.index = index
        self.kind = kind


class InfeasibleError(CubeplanError):
    """Inputs for which no plan can exist (size/dimension mismatch, lone module)."""


class InternalAssertionError(CubeplanError):
    """A guarantee the planner relies on was violated. Never expected to fire."""


class TransitUnreachableError(InternalAssertionError):
    """Single-module transit search exhausted without reaching its goal."""
