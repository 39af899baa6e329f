"""Exception types shared across the toolkit."""
from __future__ import annotations


class GvzkitError(Exception):
    """Base class for all toolkit errors."""


class StructuralInputError(GvzkitError):
    """Input data does not define a group.

    Carries the violated axiom name and a witness (an element, pair, or
    triple of indices demonstrating the failure).
    """

    def __init__(self, axiom: str, witness, message: str):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class SizeLimitError(GvzkitError):
    """A configured size bound was exceeded; carries the offending count."""

    def __init__(self, message: str, count: int | None = None):
        super().__init__(message)
        self.count = count


class NormalityError(GvzkitError):
    """A subgroup required to be normal is not; carries a conjugation witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class GroupSpecError(GvzkitError):
    """A group-spec string failed to parse; carries the error position."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class InternalCheckError(GvzkitError):
    """An internal consistency check failed (signals a bug, not bad input)."""
