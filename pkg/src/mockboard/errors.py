"""Shared exception hierarchy.

Every error carries a stable machine code (UPPER_SNAKE) used verbatim in
the HTTP error envelope, so clients can branch on ``code`` instead of
parsing messages.
"""
from __future__ import annotations


class MockboardError(Exception):
    """Base class; ``code`` is the wire-level machine code."""

    code = "ERROR"

    def __init__(self, message: str = "", fields: dict[str, str] | None = None):
        super().__init__(message or self.__class__.__name__)
        self.message = message or self.__class__.__name__
        self.fields = fields or {}


# -- assessment core ---------------------------------------------------------

class UnknownQuestion(MockboardError):
    code = "UNKNOWN_QUESTION"


class DegenerateExam(MockboardError):
    code = "DEGENERATE_EXAM"


class WeightOverflow(MockboardError):
    code = "WEIGHT_OVERFLOW"


class ClockSkew(MockboardError):
    code = "CLOCK_SKEW"


class NoData(MockboardError):
    code = "NO_DATA"


# -- store -------------------------------------------------------------------

class DuplicateKey(MockboardError):
    code = "DUPLICATE_KEY"


class ForeignKeyMissing(MockboardError):
    code = "FOREIGN_KEY_MISSING"


class DeleteRestricted(MockboardError):
    code = "DELETE_RESTRICTED"


class UnknownAccount(MockboardError):
    code = "UNKNOWN_ACCOUNT"


class UnknownCourse(MockboardError):
    code = "UNKNOWN_COURSE"


class UnknownExam(MockboardError):
    code = "UNKNOWN_EXAM"


class UnknownAttempt(MockboardError):
    code = "UNKNOWN_ATTEMPT"


class Expired(MockboardError):
    code = "EXPIRED"


class AlreadyFinalized(MockboardError):
    code = "ALREADY_FINALIZED"


class NotFinalized(MockboardError):
    code = "NOT_FINALIZED"


class NotVerified(MockboardError):
    code = "NOT_VERIFIED"


class NonEmptyStore(MockboardError):
    code = "NON_EMPTY_STORE"


class DataDirLocked(MockboardError):
    code = "DATA_DIR_LOCKED"


# -- service -----------------------------------------------------------------

class ValidationFailed(MockboardError):
    code = "VALIDATION_FAILED"


class SchemaError(ValidationFailed):
    """Question-bank CSV row rejected; ``line`` is the 1-based CSV line."""

    code = "SCHEMA_ERROR"

    def __init__(self, message: str, line: int):
        super().__init__(message, fields={"line": str(line)})
        self.line = line


class Unauthenticated(MockboardError):
    code = "UNAUTHENTICATED"


class BadCredentials(MockboardError):
    code = "BAD_CREDENTIALS"


class AwaitingVerification(MockboardError):
    code = "AWAITING_VERIFICATION"


class Disabled(MockboardError):
    code = "DISABLED"


class Forbidden(MockboardError):
    code = "FORBIDDEN"


class NotOpen(MockboardError):
    code = "NOT_OPEN"


class AlreadyTaken(MockboardError):
    code = "ALREADY_TAKEN"
