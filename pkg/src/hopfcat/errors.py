"""Exception taxonomy shared by the library and the CLI exit codes."""

from __future__ import annotations

from typing import Any


class HopfcatError(Exception):
    """Base class for every error raised by hopfcat."""


class SchemaError(HopfcatError, ValueError):
    """Input data does not parse against the expected JSON layout."""

    def __init__(self, message: str, field: str | None = None):
        self.field = field
        self.detail = message
        if field:
            message = f"{field}: {message}"
        super().__init__(message)


class PreconditionError(HopfcatError, ValueError):
    """A mathematical precondition on the inputs fails."""


class DimensionError(PreconditionError):
    """Ambient dimensions of two operands disagree."""


class InvariantViolation(HopfcatError, RuntimeError):
    """An internal identity that should hold by theory failed.

    ``counterexample`` carries a small JSON-able payload describing the
    offending data.
    """

    def __init__(self, message: str, counterexample: Any = None):
        super().__init__(message)
        self.counterexample = counterexample
