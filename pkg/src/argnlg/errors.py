"""Exception hierarchy shared by every stage of the pipeline."""

from __future__ import annotations


class ArgNlgError(Exception):
    """Base class for all domain errors raised by argnlg."""

    module = "argnlg"

    def qualified(self) -> str:
        return f"{self.module}: {self}"


# -- AIF ingestion ---------------------------------------------------------


class AifError(ArgNlgError):
    module = "aif"

    def __init__(self, message: str, ids: tuple[str, ...] = ()):
        super().__init__(message)
        self.ids = tuple(ids)


class MalformedInput(AifError):
    """The payload is not syntactically valid JSON."""


class SchemaViolation(AifError):
    """A required field is missing or a node kind is unknown."""


class InvariantViolation(AifError):
    """The graph parsed but breaks a structural invariant."""


class NetworkError(AifError):
    """The remote endpoint could not be reached."""


class RemoteError(AifError):
    """The remote endpoint answered with a non-success status."""

    def __init__(self, message: str, status: int):
        super().__init__(message)
        self.status = status


# -- logic -----------------------------------------------------------------


class LogicError(ArgNlgError):
    module = "logic"


class CompileError(LogicError):
    """A scheme node's neighbourhood has no rule interpretation."""

    def __init__(self, message: str, node_id: str | None = None):
        super().__init__(message)
        self.node_id = node_id


class InconsistentExpansion(LogicError):
    """Expanding an argument pulled in a literal and its complement."""


# -- abstract argumentation ------------------------------------------------


class FrameworkError(ArgNlgError):
    module = "af"


class UnknownArgument(FrameworkError):
    def __init__(self, arg_id: object):
        super().__init__(f"unknown argument {arg_id!r}")
        self.arg_id = arg_id


class SizeLimitExceeded(FrameworkError):
    def __init__(self, size: int, bound: int):
        super().__init__(f"framework has {size} arguments, exhaustive bound is {bound}")
        self.size = size
        self.bound = bound


# -- generation ------------------------------------------------------------


class GenerationError(ArgNlgError):
    module = "nlg"


class MissingMarker(GenerationError):
    def __init__(self, key: tuple):
        super().__init__(f"no discourse marker for {key!r}")
        self.key = key
