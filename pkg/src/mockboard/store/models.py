"""Persisted entities and their wire/disk serialization.

Dataclasses are dumb containers; invariants are enforced by the store at
mutation time. ``to_dict``/``from_dict`` round-trip through JSON-safe
values: datetimes as ISO-8601 text (UTC), dates as YYYY-MM-DD, Decimals
as strings.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from datetime import date, datetime
from decimal import Decimal
from enum import Enum

from ..core import Outcome


class Role(str, Enum):
    ADMIN = "Admin"
    EXAMINEE = "Examinee"


class AccountStatus(str, Enum):
    PENDING = "Pending"
    VERIFIED = "Verified"
    DISABLED = "Disabled"


class EligibilityStatus(str, Enum):
    LOCKED = "Locked"
    TAKE_EXAM = "TakeExam"
    RETAKE = "Retake"
    VIEW_CERTIFICATE = "ViewCertificate"


def _iso(dt: datetime | None) -> str | None:
    return dt.isoformat() if dt else None


def _parse_dt(text: str | None) -> datetime | None:
    return datetime.fromisoformat(text) if text else None


def _parse_date(text: str | None) -> date | None:
    return date.fromisoformat(text) if text else None


@dataclass
class ExamineeProfile:
    student_number: str
    last_name: str
    first_name: str
    middle_name: str
    address: str
    contact_number: str
    birthdate: date
    course_id: str
    major_id: str | None = None
    terms_accepted: bool = True

    def full_name(self) -> str:
        middle = f" {self.middle_name}" if self.middle_name else ""
        return f"{self.last_name}, {self.first_name}{middle}"

    def to_dict(self) -> dict:
        return {
            "student_number": self.student_number,
            "last_name": self.last_name,
            "first_name": self.first_name,
            "middle_name": self.middle_name,
            "address": self.address,
            "contact_number": self.contact_number,
            "birthdate": self.birthdate.isoformat(),
            "course_id": self.course_id,
            "major_id": self.major_id,
            "terms_accepted": self.terms_accepted,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ExamineeProfile":
        return cls(
            student_number=d["student_number"],
            last_name=d["last_name"],
            first_name=d["first_name"],
            middle_name=d["middle_name"],
            address=d["address"],
            contact_number=d["contact_number"],
            birthdate=_parse_date(d["birthdate"]),
            course_id=d["course_id"],
            major_id=d.get("major_id"),
            terms_accepted=d.get("terms_accepted", True),
        )


@dataclass
class Account:
    account_id: str
    username: str
    password_digest: str
    role: Role
    status: AccountStatus
    created_at: datetime
    scope_course_id: str | None = None
    profile: ExamineeProfile | None = None

    def to_dict(self) -> dict:
        return {
            "account_id": self.account_id,
            "username": self.username,
            "password_digest": self.password_digest,
            "role": self.role.value,
            "status": self.status.value,
            "created_at": _iso(self.created_at),
            "scope_course_id": self.scope_course_id,
            "profile": self.profile.to_dict() if self.profile else None,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Account":
        profile = d.get("profile")
        return cls(
            account_id=d["account_id"],
            username=d["username"],
            password_digest=d["password_digest"],
            role=Role(d["role"]),
            status=AccountStatus(d["status"]),
            created_at=_parse_dt(d["created_at"]),
            scope_course_id=d.get("scope_course_id"),
            profile=ExamineeProfile.from_dict(profile) if profile else None,
        )


@dataclass
class Major:
    major_id: str
    name: str


@dataclass
class Course:
    course_id: str
    name: str
    majors: list[Major]
    created_by: str
    created_at: datetime
    updated_at: datetime | None = None

    def major_names(self) -> list[str]:
        return [m.name for m in self.majors]

    def to_dict(self) -> dict:
        return {
            "course_id": self.course_id,
            "name": self.name,
            "majors": [{"major_id": m.major_id, "name": m.name} for m in self.majors],
            "created_by": self.created_by,
            "created_at": _iso(self.created_at),
            "updated_at": _iso(self.updated_at),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Course":
        return cls(
            course_id=d["course_id"],
            name=d["name"],
            majors=[Major(m["major_id"], m["name"]) for m in d.get("majors", [])],
            created_by=d["created_by"],
            created_at=_parse_dt(d["created_at"]),
            updated_at=_parse_dt(d.get("updated_at")),
        )


@dataclass
class Exam:
    exam_id: str
    course_id: str
    name: str
    instructions: str
    exam_date: date
    duration_minutes: int
    passing_rate: Decimal
    weight: Decimal
    major_id: str | None = None
    reexam_date: date | None = None
    created_at: datetime | None = None
    updated_at: datetime | None = None
    seq: int = 0
    # Materialized from the questions table on read; never stored.
    question_ids: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "exam_id": self.exam_id,
            "course_id": self.course_id,
            "name": self.name,
            "instructions": self.instructions,
            "exam_date": self.exam_date.isoformat(),
            "duration_minutes": self.duration_minutes,
            "passing_rate": str(self.passing_rate),
            "weight": str(self.weight),
            "major_id": self.major_id,
            "reexam_date": self.reexam_date.isoformat() if self.reexam_date else None,
            "created_at": _iso(self.created_at),
            "updated_at": _iso(self.updated_at),
            "seq": self.seq,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Exam":
        return cls(
            exam_id=d["exam_id"],
            course_id=d["course_id"],
            name=d["name"],
            instructions=d["instructions"],
            exam_date=_parse_date(d["exam_date"]),
            duration_minutes=int(d["duration_minutes"]),
            passing_rate=Decimal(d["passing_rate"]),
            weight=Decimal(d["weight"]),
            major_id=d.get("major_id"),
            reexam_date=_parse_date(d.get("reexam_date")),
            created_at=_parse_dt(d.get("created_at")),
            updated_at=_parse_dt(d.get("updated_at")),
            seq=int(d.get("seq", 0)),
        )


@dataclass
class Question:
    question_id: str
    exam_id: str
    stem: str
    choices: list[str]
    correct_index: int
    category: str | None = None
    seq: int = 0

    def to_dict(self) -> dict:
        return {
            "question_id": self.question_id,
            "exam_id": self.exam_id,
            "stem": self.stem,
            "choices": list(self.choices),
            "correct_index": self.correct_index,
            "category": self.category,
            "seq": self.seq,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Question":
        return cls(
            question_id=d["question_id"],
            exam_id=d["exam_id"],
            stem=d["stem"],
            choices=list(d["choices"]),
            correct_index=int(d["correct_index"]),
            category=d.get("category"),
            seq=int(d.get("seq", 0)),
        )


@dataclass
class Attempt:
    attempt_id: str
    exam_id: str
    examinee_id: str
    attempt_no: int
    seed: int
    started_at: datetime
    deadline: datetime
    submitted_at: datetime | None = None
    answers: dict[str, int] = field(default_factory=dict)
    raw_score: int = 0
    weighted_score: Decimal = Decimal("0.0")
    outcome: Outcome = Outcome.IN_PROGRESS

    @property
    def finalized(self) -> bool:
        return self.outcome is not Outcome.IN_PROGRESS

    def to_dict(self) -> dict:
        return {
            "attempt_id": self.attempt_id,
            "exam_id": self.exam_id,
            "examinee_id": self.examinee_id,
            "attempt_no": self.attempt_no,
            "seed": self.seed,
            "started_at": _iso(self.started_at),
            "deadline": _iso(self.deadline),
            "submitted_at": _iso(self.submitted_at),
            "answers": dict(self.answers),
            "raw_score": self.raw_score,
            "weighted_score": str(self.weighted_score),
            "outcome": self.outcome.value,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Attempt":
        return cls(
            attempt_id=d["attempt_id"],
            exam_id=d["exam_id"],
            examinee_id=d["examinee_id"],
            attempt_no=int(d["attempt_no"]),
            seed=int(d["seed"]),
            started_at=_parse_dt(d["started_at"]),
            deadline=_parse_dt(d["deadline"]),
            submitted_at=_parse_dt(d.get("submitted_at")),
            answers={k: int(v) for k, v in d.get("answers", {}).items()},
            raw_score=int(d.get("raw_score", 0)),
            weighted_score=Decimal(d.get("weighted_score", "0.0")),
            outcome=Outcome(d.get("outcome", Outcome.IN_PROGRESS.value)),
        )


@dataclass
class Announcement:
    announcement_id: str
    body: str
    author: str
    created_at: datetime

    def to_dict(self) -> dict:
        return {
            "announcement_id": self.announcement_id,
            "body": self.body,
            "author": self.author,
            "created_at": _iso(self.created_at),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Announcement":
        return cls(
            announcement_id=d["announcement_id"],
            body=d["body"],
            author=d["author"],
            created_at=_parse_dt(d["created_at"]),
        )
