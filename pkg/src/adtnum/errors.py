"""Exception hierarchy shared across the package."""

from __future__ import annotations


class AdtError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(AdtError):
    """Lexical or syntactic error in DSL or term input."""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.line = line
        self.col = col
        if line:
            message = f"{line}:{col}: {message}"
        super().__init__(message)


class ValidationError(AdtError):
    """A definition violates a well-formedness rule."""

    rule = "Validation"

    def __str__(self) -> str:
        return f"{self.rule}: {super().__str__()}"


class HigherOrderArg(ValidationError):
    rule = "HigherOrderArg"


class UnknownBase(ValidationError):
    rule = "UnknownBase"

    def __init__(self, name: str, message: str | None = None):
        self.name = name
        super().__init__(message or f"base type '{name}' is not registered")


class BadResultType(ValidationError):
    rule = "BadResultType"


class MutualOrForwardReference(ValidationError):
    rule = "MutualOrForwardReference"


class DuplicateName(ValidationError):
    rule = "DuplicateName"


class TermError(AdtError):
    """A term value does not fit its constructor signature."""


class RankBoundViolated(AdtError):
    """A term was offered to a stratum below its own rank."""


class RegistryError(AdtError):
    """Base codec registration conflict."""
