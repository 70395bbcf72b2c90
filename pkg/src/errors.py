"""
Exception hierarchy for CrossedCheck.

Law failures are reported as Verdict values; exceptions are reserved for
malformed input and violated preconditions.
"""
from typing import Any, Optional


class CrossedCheckError(ValueError):
    """Base error; carries an optional witness for the failing input."""

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.witness = witness


class NotAssociative(CrossedCheckError):
    pass


class NoIdentity(CrossedCheckError):
    pass


class NoInverse(CrossedCheckError):
    pass


class OrderBoundExceeded(CrossedCheckError):
    pass


class NotAnAction(CrossedCheckError):
    pass


class SizeBoundExceeded(CrossedCheckError):
    pass


class NotEquivariant(CrossedCheckError):
    pass


class NotCrossed(CrossedCheckError):
    pass


class IncompatibleFunctors(CrossedCheckError):
    pass


class NotComonadMorphism(CrossedCheckError):
    pass


class NotCoalgebraMorphism(CrossedCheckError):
    pass


class NotWellDefined(CrossedCheckError):
    pass


class ChainTypeMismatch(CrossedCheckError):
    pass


class ConfigInvalid(CrossedCheckError):
    pass


class IndexOutOfRange(CrossedCheckError):
    pass


class ParseError(CrossedCheckError):
    """
    Scenario text could not be parsed. `line` is 1-based and set for malformed
    JSON; `location` is the dotted path of a schema violation.
    """

    def __init__(self, message: str, line: Optional[int] = None, location: Optional[str] = None):
        if location is not None:
            message = f"{location}: {message}"
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
        self.location = location


class UnresolvedReference(CrossedCheckError):
    def __init__(self, name: str, section: str = "gsets"):
        super().__init__(f"Unresolved reference '{name}' (expected in '{section}')", witness=name)
        self.name = name


class EquivarianceDeclarationFailed(CrossedCheckError):
    pass
