"""Exception hierarchy shared by every module."""

from __future__ import annotations


class AbelrepError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(AbelrepError, ValueError):
    """Malformed cycle notation, group spec or graph file."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.reason = message
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class DomainError(AbelrepError, ValueError):
    """An operation was called outside its mathematical domain."""


class CapacityError(AbelrepError):
    """An enumeration or search exceeded its configured limit."""

    def __init__(self, message: str, limit: int | None = None):
        self.limit = limit
        super().__init__(message)


class SynthesisError(AbelrepError):
    """A witness construction failed verification. Always a bug."""
