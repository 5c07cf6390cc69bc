"""Durable persistence: entities, journal+snapshot files, eligibility queries."""
from .models import (
    Account,
    AccountStatus,
    Announcement,
    Attempt,
    Course,
    EligibilityStatus,
    Exam,
    ExamineeProfile,
    Major,
    Question,
    Role,
)
from .passwords import digest_password, verify_password
from .store import GRACE_SECONDS_DEFAULT, Store, new_id

__all__ = [
    "Account",
    "AccountStatus",
    "Announcement",
    "Attempt",
    "Course",
    "EligibilityStatus",
    "Exam",
    "ExamineeProfile",
    "GRACE_SECONDS_DEFAULT",
    "Major",
    "Question",
    "Role",
    "Store",
    "digest_password",
    "new_id",
    "verify_password",
]
