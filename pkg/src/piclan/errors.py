"""Exception types shared across the package.

Every error that carries a witness stores it on the exception object so
callers can replay the failing configuration.
"""

from __future__ import annotations


class PiclanError(Exception):
    """Base class for all package errors."""


class DuplicateLabel(PiclanError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"duplicate element label: {label!r}")


class CodomainMismatch(PiclanError):
    """Composition or construction attempted across unequal boundary objects."""


class NonCommuting(PiclanError):
    """A square or triangle fails to commute; `witness` is an offending element."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message if witness is None else f"{message} (witness: {witness!r})")


class TypeMismatch(PiclanError):
    """A term map does not live over the required type map; `witness` names the point."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message if witness is None else f"{message} (witness: {witness!r})")


class TriangleViolation(PiclanError):
    """A claimed morphism over a base fails its triangle equation."""


class ClassViolation(PiclanError):
    """A map required to belong to a map class does not."""


class SearchBudgetExceeded(PiclanError):
    """An exhaustive search would exceed its candidate budget."""


class BoundsTooTight(PiclanError):
    """Requested construction does not fit in the given cardinality bounds."""


class LawViolation(PiclanError):
    """An input structure fails its law suite; `report` holds the failing rows."""

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


class SquareViolation(PiclanError):
    """A constructed classifying square fails its pullback check."""


class LiftInvalid(PiclanError):
    """A weak-pullback lifter returned a map violating its cone equations."""

    def __init__(self, message, cone=None):
        self.cone = cone
        super().__init__(message)


class JsonFormatError(PiclanError):
    """Interchange data is malformed; the message names the offending label."""


class ParseError(PiclanError):
    """Surface-syntax error with source position."""

    def __init__(self, message, line, col):
        self.line = line
        self.col = col
        super().__init__(f"{line}:{col}: {message}")


class CheckError(PiclanError):
    """Surface type error with the failing sub-judgment's source position."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"{line}:{col}: {message}"
        super().__init__(message)


class UniverseError(PiclanError):
    """A former was requested at universe levels the model does not provide."""


class EmptyContext(PiclanError):
    """Evaluation requested in a context whose denotation is empty."""
