"""Durable single-node store: journaled entities, eligibility, attempts.

One ``Store`` owns a data directory exclusively (flock). All public
methods serialize on an internal lock; a mutation is acknowledged only
after its journal record is fsynced, so acknowledged writes survive
SIGKILL. Reads are pure; expiring overdue attempts is an explicit
mutation (``expire_overdue``) invoked by the service layer.
"""
from __future__ import annotations

import csv
import dataclasses
import fcntl
import io
import json
import secrets
import threading
from datetime import date, datetime
from pathlib import Path

from .. import errors
from ..core import (
    Outcome,
    as_percent,
    deadline_for,
    grade,
    subject_outcome,
    validate_student_number,
    weighted_score,
)
from . import journal as jrn
from .models import (
    Account,
    AccountStatus,
    Announcement,
    Attempt,
    Course,
    EligibilityStatus,
    Exam,
    ExamineeProfile,
    Question,
    Role,
)

GRACE_SECONDS_DEFAULT = 30
COMPACT_JOURNAL_BYTES = 4 * 1024 * 1024

TABLES = ("accounts", "courses", "exams", "questions", "attempts", "announcements")

_MODEL_FOR = {
    "accounts": Account,
    "courses": Course,
    "exams": Exam,
    "questions": Question,
    "attempts": Attempt,
    "announcements": Announcement,
}

_ID_FIELD = {
    "accounts": "account_id",
    "courses": "course_id",
    "exams": "exam_id",
    "questions": "question_id",
    "attempts": "attempt_id",
    "announcements": "announcement_id",
}


def new_id(prefix: str) -> str:
    return f"{prefix}-{secrets.token_hex(6)}"


def _nonblank(value: str, field: str, fields: dict[str, str]) -> None:
    if not isinstance(value, str) or not value.strip():
        fields[field] = "required"


class Store:
    """Embedded persistent store for all mock-board entities."""

    def __init__(
        self,
        data_dir: str | Path,
        grace_seconds: int = GRACE_SECONDS_DEFAULT,
        compact_bytes: int = COMPACT_JOURNAL_BYTES,
    ):
        self.data_dir = Path(data_dir)
        self.grace_seconds = grace_seconds
        self.compact_bytes = compact_bytes
        self._lock = threading.RLock()
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self._lock_fh = open(self.data_dir / "LOCK", "a+")
        try:
            fcntl.flock(self._lock_fh.fileno(), fcntl.LOCK_EX | fcntl.LOCK_NB)
        except OSError:
            self._lock_fh.close()
            raise errors.DataDirLocked(f"data directory {self.data_dir} is in use")
        self.accounts: dict[str, Account] = {}
        self.courses: dict[str, Course] = {}
        self.exams: dict[str, Exam] = {}
        self.questions: dict[str, Question] = {}
        self.attempts: dict[str, Attempt] = {}
        self.announcements: dict[str, Announcement] = {}
        self._exam_seq = 1
        self._question_seq = 1
        self._recover()

    # -- recovery / durability ------------------------------------------------

    def _recover(self) -> None:
        self._gen = jrn.latest_snapshot_gen(self.data_dir)
        if self._gen:
            self._load_state(jrn.read_snapshot(self.data_dir, self._gen))
        else:
            self._gen = 1
        for record in jrn.read_journal(jrn.journal_path(self.data_dir, self._gen)):
            self._apply(record)
        for exam in self.exams.values():
            exam.question_ids = []
        for q in sorted(self.questions.values(), key=lambda q: q.seq):
            self.exams[q.exam_id].question_ids.append(q.question_id)
        self._exam_seq = max((e.seq for e in self.exams.values()), default=0) + 1
        self._question_seq = max((q.seq for q in self.questions.values()), default=0) + 1
        self._journal = jrn.JournalWriter(jrn.journal_path(self.data_dir, self._gen))

    def _load_state(self, state: dict) -> None:
        for table in TABLES:
            model = _MODEL_FOR[table]
            rows = {r[_ID_FIELD[table]]: model.from_dict(r) for r in state["tables"][table]}
            setattr(self, table, rows)

    def _state_dict(self) -> dict:
        return {
            "format": 1,
            "tables": {
                table: [row.to_dict() for row in getattr(self, table).values()]
                for table in TABLES
            },
        }

    def _apply(self, record: dict) -> None:
        op = record["op"]
        if op == "put":
            table = record["t"]
            row = _MODEL_FOR[table].from_dict(record["r"])
            getattr(self, table)[record["r"][_ID_FIELD[table]]] = row
        elif op == "del":
            getattr(self, record["t"]).pop(record["id"], None)
        elif op == "ans":
            self.attempts[record["a"]].answers[record["q"]] = record["c"]

    def _journal_put(self, table: str, row) -> None:
        self._journal.append({"op": "put", "t": table, "r": row.to_dict()})
        getattr(self, table)[getattr(row, _ID_FIELD[table])] = row
        self._maybe_compact()

    def _journal_del(self, table: str, row_id: str) -> None:
        self._journal.append({"op": "del", "t": table, "id": row_id})
        getattr(self, table).pop(row_id, None)
        self._maybe_compact()

    def _maybe_compact(self) -> None:
        if self._journal.size >= self.compact_bytes:
            self.compact()

    def compact(self) -> None:
        """Write a fresh snapshot and start an empty journal generation."""
        with self._lock:
            old_gen = self._gen
            new_gen = old_gen + 1
            jrn.write_snapshot(self.data_dir, new_gen, self._state_dict())
            self._journal.close()
            self._journal = jrn.JournalWriter(jrn.journal_path(self.data_dir, new_gen))
            self._gen = new_gen
            jrn.journal_path(self.data_dir, old_gen).unlink(missing_ok=True)
            jrn.snapshot_path(self.data_dir, old_gen).unlink(missing_ok=True)
            jrn.fsync_dir(self.data_dir)

    def close(self) -> None:
        with self._lock:
            self.compact()
            self._journal.close()
            fcntl.flock(self._lock_fh.fileno(), fcntl.LOCK_UN)
            self._lock_fh.close()

    def __enter__(self) -> "Store":
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    @property
    def is_empty(self) -> bool:
        return not any(getattr(self, table) for table in TABLES)

    # -- accounts --------------------------------------------------------------

    def put_account(self, account: Account, now: datetime) -> Account:
        with self._lock:
            fields: dict[str, str] = {}
            _nonblank(account.username, "username", fields)
            _nonblank(account.password_digest, "password", fields)
            if account.role is Role.EXAMINEE:
                if account.profile is None:
                    fields["profile"] = "required for examinees"
                else:
                    self._check_profile(account.profile, fields)
            elif account.profile is not None:
                fields["profile"] = "admins carry no examinee profile"
            if fields:
                raise errors.ValidationFailed("invalid account", fields=fields)
            if account.scope_course_id and account.scope_course_id not in self.courses:
                raise errors.ForeignKeyMissing(
                    f"scope course {account.scope_course_id!r} does not exist"
                )
            if not account.account_id:
                account.account_id = new_id("acct")
            existing = self.accounts.get(account.account_id)
            self._check_unique_username(account)
            if account.profile is not None:
                self._check_unique_student_number(account)
            account.created_at = existing.created_at if existing else (account.created_at or now)
            self._journal_put("accounts", account)
            return account

    def _check_profile(self, profile: ExamineeProfile, fields: dict[str, str]) -> None:
        for name in ("last_name", "first_name", "middle_name", "address", "contact_number"):
            _nonblank(getattr(profile, name), name, fields)
        if not validate_student_number(profile.student_number):
            fields["student_number"] = "must match YYYY-XXXX"
        if not isinstance(profile.birthdate, date):
            fields["birthdate"] = "required"
        if not profile.terms_accepted:
            fields["terms_accepted"] = "terms must be accepted"
        course = self.courses.get(profile.course_id)
        if course is None:
            fields["course_id"] = "unknown course"
        elif course.majors:
            if not profile.major_id:
                fields["major_id"] = "course requires a major"
            elif all(m.major_id != profile.major_id for m in course.majors):
                fields["major_id"] = "unknown major for course"
        elif profile.major_id:
            fields["major_id"] = "course has no majors"

    def _check_unique_username(self, account: Account) -> None:
        lowered = account.username.lower()
        for other in self.accounts.values():
            if other.account_id != account.account_id and other.username.lower() == lowered:
                raise errors.DuplicateKey(
                    f"username {account.username!r} is taken", fields={"username": "taken"}
                )

    def _check_unique_student_number(self, account: Account) -> None:
        number = account.profile.student_number
        for other in self.accounts.values():
            if (
                other.account_id != account.account_id
                and other.profile is not None
                and other.profile.student_number == number
            ):
                raise errors.DuplicateKey(
                    f"student number {number!r} is taken",
                    fields={"student_number": "taken"},
                )

    def get_account(self, account_id: str) -> Account:
        account = self.accounts.get(account_id)
        if account is None:
            raise errors.UnknownAccount(f"no account {account_id!r}")
        return account

    def find_account_by_username(self, username: str) -> Account | None:
        lowered = username.lower()
        for account in self.accounts.values():
            if account.username.lower() == lowered:
                return account
        return None

    def list_accounts(
        self,
        status: AccountStatus | None = None,
        role: Role | None = None,
        course_id: str | None = None,
    ) -> list[Account]:
        rows = [
            a
            for a in self.accounts.values()
            if (status is None or a.status is status)
            and (role is None or a.role is role)
            and (
                course_id is None
                or (a.profile is not None and a.profile.course_id == course_id)
            )
        ]
        return sorted(rows, key=lambda a: (a.created_at, a.account_id))

    def verify_examinee(self, account_id: str, now: datetime) -> Account:
        with self._lock:
            account = self.get_account(account_id)
            if account.status is AccountStatus.VERIFIED:
                return account
            if account.status is AccountStatus.DISABLED:
                raise errors.ValidationFailed("account is disabled")
            account.status = AccountStatus.VERIFIED
            self._journal_put("accounts", account)
            return account

    def delete_account(self, account_id: str) -> None:
        with self._lock:
            self.get_account(account_id)
            if any(a.examinee_id == account_id for a in self.attempts.values()):
                raise errors.DeleteRestricted("account has attempts")
            self._journal_del("accounts", account_id)

    # -- courses ---------------------------------------------------------------

    def put_course(self, course: Course, now: datetime) -> Course:
        with self._lock:
            fields: dict[str, str] = {}
            _nonblank(course.name, "name", fields)
            seen = set()
            for major in course.majors:
                _nonblank(major.name, "majors", fields)
                if major.name.lower() in seen:
                    fields["majors"] = f"duplicate major {major.name!r}"
                seen.add(major.name.lower())
                if not major.major_id:
                    major.major_id = new_id("major")
            if fields:
                raise errors.ValidationFailed("invalid course", fields=fields)
            lowered = course.name.lower()
            for other in self.courses.values():
                if other.course_id != course.course_id and other.name.lower() == lowered:
                    raise errors.DuplicateKey(
                        f"course {course.name!r} already exists", fields={"name": "taken"}
                    )
            if not course.course_id:
                course.course_id = new_id("course")
            existing = self.courses.get(course.course_id)
            if existing:
                self._check_major_removal(existing, course)
                course.created_at = existing.created_at
                course.created_by = existing.created_by
                course.updated_at = now
            else:
                course.created_at = course.created_at or now
            self._journal_put("courses", course)
            return course

    def _check_major_removal(self, existing: Course, updated: Course) -> None:
        kept = {m.major_id for m in updated.majors}
        for major in existing.majors:
            if major.major_id in kept:
                continue
            used = any(
                a.profile is not None and a.profile.major_id == major.major_id
                for a in self.accounts.values()
            ) or any(e.major_id == major.major_id for e in self.exams.values())
            if used:
                raise errors.DeleteRestricted(f"major {major.name!r} is referenced")

    def get_course(self, course_id: str) -> Course:
        course = self.courses.get(course_id)
        if course is None:
            raise errors.UnknownCourse(f"no course {course_id!r}")
        return course

    def find_course_by_name(self, name: str) -> Course | None:
        lowered = name.lower()
        for course in self.courses.values():
            if course.name.lower() == lowered:
                return course
        return None

    def list_courses(self) -> list[Course]:
        return sorted(self.courses.values(), key=lambda c: (c.created_at, c.course_id))

    def delete_course(self, course_id: str) -> None:
        with self._lock:
            self.get_course(course_id)
            if any(e.course_id == course_id for e in self.exams.values()):
                raise errors.DeleteRestricted("course has exams")
            if any(
                a.profile is not None and a.profile.course_id == course_id
                for a in self.accounts.values()
            ):
                raise errors.DeleteRestricted("course has registered examinees")
            if any(a.scope_course_id == course_id for a in self.accounts.values()):
                raise errors.DeleteRestricted("course scopes an admin account")
            self._journal_del("courses", course_id)

    # -- exams -------------------------------------------------------------------

    def put_exam(self, exam: Exam, now: datetime) -> Exam:
        with self._lock:
            fields: dict[str, str] = {}
            _nonblank(exam.name, "name", fields)
            if exam.duration_minutes < 1:
                fields["duration_minutes"] = "must be at least 1"
            if not isinstance(exam.exam_date, date):
                fields["exam_date"] = "required"
            elif exam.reexam_date is not None and exam.reexam_date < exam.exam_date:
                fields["reexam_date"] = "must not precede exam_date"
            if fields:
                raise errors.ValidationFailed("invalid exam", fields=fields)
            exam.passing_rate = as_percent(exam.passing_rate, "passing_rate")
            exam.weight = as_percent(exam.weight, "weight")
            course = self.courses.get(exam.course_id)
            if course is None:
                raise errors.ForeignKeyMissing(f"no course {exam.course_id!r}")
            if exam.major_id and all(m.major_id != exam.major_id for m in course.majors):
                raise errors.ForeignKeyMissing(f"no major {exam.major_id!r} in course")
            if not exam.exam_id:
                exam.exam_id = new_id("exam")
            existing = self.exams.get(exam.exam_id)
            if existing:
                exam.seq = existing.seq
                exam.created_at = existing.created_at
                exam.updated_at = now
                exam.question_ids = existing.question_ids
            else:
                exam.seq = self._exam_seq
                self._exam_seq += 1
                exam.created_at = exam.created_at or now
                exam.question_ids = []
            self._journal_put("exams", exam)
            return exam

    def get_exam(self, exam_id: str) -> Exam:
        exam = self.exams.get(exam_id)
        if exam is None:
            raise errors.UnknownExam(f"no exam {exam_id!r}")
        return exam

    def list_exams(self, course_id: str | None = None) -> list[Exam]:
        rows = [e for e in self.exams.values() if course_id is None or e.course_id == course_id]
        return sorted(rows, key=lambda e: e.seq)

    def delete_exam(self, exam_id: str) -> None:
        with self._lock:
            exam = self.get_exam(exam_id)
            if any(a.exam_id == exam_id for a in self.attempts.values()):
                raise errors.DeleteRestricted("exam has attempts")
            for qid in list(exam.question_ids):
                self._journal_del("questions", qid)
            self._journal_del("exams", exam_id)

    def course_weight_total(self, course_id: str) -> float:
        """Sum of exam weights for a course; authoring sanity check."""
        return float(sum(e.weight for e in self.exams.values() if e.course_id == course_id))

    # -- questions ---------------------------------------------------------------

    def put_question(self, question: Question, now: datetime) -> Question:
        with self._lock:
            exam = self.exams.get(question.exam_id)
            if exam is None:
                raise errors.ForeignKeyMissing(f"no exam {question.exam_id!r}")
            if any(a.exam_id == exam.exam_id for a in self.attempts.values()):
                raise errors.ValidationFailed(
                    "exam already has attempts; question bank is frozen"
                )
            fields: dict[str, str] = {}
            _nonblank(question.stem, "stem", fields)
            if not 2 <= len(question.choices) <= 5:
                fields["choices"] = "needs 2 to 5 choices"
            elif any(not c.strip() for c in question.choices):
                fields["choices"] = "choices must be non-blank"
            if not 0 <= question.correct_index < len(question.choices):
                fields["correct_index"] = "out of range"
            if fields:
                raise errors.ValidationFailed("invalid question", fields=fields)
            if not question.question_id:
                question.question_id = new_id("ques")
            existing = self.questions.get(question.question_id)
            if existing:
                if existing.exam_id != question.exam_id:
                    raise errors.ValidationFailed("question cannot move between exams")
                question.seq = existing.seq
            else:
                question.seq = self._question_seq
                self._question_seq += 1
                exam.question_ids.append(question.question_id)
            self._journal_put("questions", question)
            return question

    def get_question(self, question_id: str) -> Question:
        question = self.questions.get(question_id)
        if question is None:
            raise errors.UnknownQuestion(f"no question {question_id!r}")
        return question

    def list_questions(self, exam_id: str) -> list[Question]:
        exam = self.get_exam(exam_id)
        return [self.questions[qid] for qid in exam.question_ids]

    def delete_question(self, question_id: str) -> None:
        with self._lock:
            question = self.get_question(question_id)
            if any(a.exam_id == question.exam_id for a in self.attempts.values()):
                raise errors.DeleteRestricted("exam has attempts; question bank is frozen")
            self.exams[question.exam_id].question_ids.remove(question_id)
            self._journal_del("questions", question_id)

    # -- announcements -------------------------------------------------------------

    def put_announcement(self, announcement: Announcement, now: datetime) -> Announcement:
        with self._lock:
            if not announcement.body.strip():
                raise errors.ValidationFailed("announcement body is blank", fields={"body": "required"})
            if not announcement.announcement_id:
                announcement.announcement_id = new_id("note")
            announcement.created_at = announcement.created_at or now
            self._journal_put("announcements", announcement)
            return announcement

    def list_announcements(self) -> list[Announcement]:
        return sorted(
            self.announcements.values(),
            key=lambda a: (a.created_at, a.announcement_id),
            reverse=True,
        )

    def delete_announcement(self, announcement_id: str) -> None:
        with self._lock:
            if announcement_id not in self.announcements:
                raise errors.ValidationFailed(f"no announcement {announcement_id!r}")
            self._journal_del("announcements", announcement_id)

    # -- eligibility ------------------------------------------------------------

    def _profile_matches(self, exam: Exam, profile: ExamineeProfile) -> bool:
        if exam.course_id != profile.course_id:
            return False
        if exam.major_id and profile.major_id and exam.major_id != profile.major_id:
            return False
        return True

    def _attempts_for(self, examinee_id: str, exam_id: str) -> list[Attempt]:
        rows = [
            a
            for a in self.attempts.values()
            if a.examinee_id == examinee_id and a.exam_id == exam_id
        ]
        return sorted(rows, key=lambda a: a.attempt_no)

    def _exam_status(
        self, exam: Exam, examinee_id: str, now: datetime
    ) -> tuple[EligibilityStatus, Attempt | None]:
        rows = self._attempts_for(examinee_id, exam.exam_id)
        if not rows:
            if now.date() < exam.exam_date:
                return EligibilityStatus.LOCKED, None
            return EligibilityStatus.TAKE_EXAM, None
        latest = rows[-1]
        if not latest.finalized:
            return EligibilityStatus.TAKE_EXAM, latest
        if (
            latest.attempt_no == 1
            and latest.outcome is Outcome.FAILED
            and exam.reexam_date is not None
            and now.date() >= exam.reexam_date
        ):
            return EligibilityStatus.RETAKE, latest
        return EligibilityStatus.VIEW_CERTIFICATE, latest

    def eligible_exams(
        self, examinee_id: str, now: datetime
    ) -> list[tuple[Exam, EligibilityStatus, Attempt | None]]:
        """Dashboard rows: exams for the examinee's program with status.

        Pure read; callers wanting overdue attempts reflected must run
        ``expire_overdue`` first.
        """
        account = self.get_account(examinee_id)
        if account.role is not Role.EXAMINEE or account.profile is None:
            raise errors.NotVerified("not an examinee account")
        if account.status is not AccountStatus.VERIFIED:
            raise errors.NotVerified("examinee is not verified")
        rows = []
        for exam in self.list_exams():
            if not self._profile_matches(exam, account.profile):
                continue
            if not exam.question_ids:
                continue
            status, attempt = self._exam_status(exam, examinee_id, now)
            rows.append((exam, status, attempt))
        return rows

    # -- attempts ----------------------------------------------------------------

    def start_attempt(
        self,
        examinee_id: str,
        exam_id: str,
        now: datetime,
        seed: int | None = None,
    ) -> tuple[Attempt, bool]:
        """Create (or resume) the examinee's attempt. Returns (attempt, resumed)."""
        with self._lock:
            account = self.get_account(examinee_id)
            if account.role is not Role.EXAMINEE or account.profile is None:
                raise errors.Forbidden("only examinees take exams")
            if account.status is not AccountStatus.VERIFIED:
                raise errors.NotVerified("examinee is not verified")
            exam = self.get_exam(exam_id)
            if not self._profile_matches(exam, account.profile):
                raise errors.Forbidden("exam is not offered to your program")
            if not exam.question_ids:
                raise errors.NotOpen("exam has no questions yet")
            self.expire_overdue(now, examinee_id=examinee_id)
            status, attempt = self._exam_status(exam, examinee_id, now)
            if status is EligibilityStatus.LOCKED:
                raise errors.NotOpen(f"exam opens {exam.exam_date.isoformat()}")
            if status is EligibilityStatus.VIEW_CERTIFICATE:
                raise errors.AlreadyTaken("exam is already finalized")
            if status is EligibilityStatus.TAKE_EXAM and attempt is not None:
                return attempt, True
            attempt_no = 2 if status is EligibilityStatus.RETAKE else 1
            row = Attempt(
                attempt_id=new_id("atmp"),
                exam_id=exam_id,
                examinee_id=examinee_id,
                attempt_no=attempt_no,
                seed=seed if seed is not None else secrets.randbits(64),
                started_at=now,
                deadline=deadline_for(now, exam.duration_minutes),
            )
            self._journal_put("attempts", row)
            return row, False

    def get_attempt(self, attempt_id: str) -> Attempt:
        attempt = self.attempts.get(attempt_id)
        if attempt is None:
            raise errors.UnknownAttempt(f"no attempt {attempt_id!r}")
        return attempt

    def list_attempts(
        self,
        exam_id: str | None = None,
        examinee_id: str | None = None,
        finalized_only: bool = False,
    ) -> list[Attempt]:
        rows = [
            a
            for a in self.attempts.values()
            if (exam_id is None or a.exam_id == exam_id)
            and (examinee_id is None or a.examinee_id == examinee_id)
            and (not finalized_only or a.finalized)
        ]
        return sorted(rows, key=lambda a: (a.started_at, a.attempt_id))

    def _past_grace(self, attempt: Attempt, now: datetime) -> bool:
        return (now - attempt.deadline).total_seconds() > self.grace_seconds

    def record_answer(
        self, attempt_id: str, question_id: str, choice: int, at: datetime
    ) -> Attempt:
        """Upsert one answer (authored choice index); last write wins."""
        with self._lock:
            attempt = self.get_attempt(attempt_id)
            if attempt.finalized:
                raise errors.AlreadyFinalized("attempt is already graded")
            question = self.questions.get(question_id)
            if question is None or question.exam_id != attempt.exam_id:
                raise errors.UnknownQuestion(
                    f"question {question_id!r} is not part of this exam"
                )
            if not isinstance(choice, int) or not 0 <= choice < len(question.choices):
                raise errors.ValidationFailed(
                    "choice index out of range", fields={"choice": "out of range"}
                )
            if self._past_grace(attempt, at):
                self.finalize_attempt(attempt_id, at)
                raise errors.Expired("answer window has closed")
            self._journal.append(
                {"op": "ans", "a": attempt_id, "q": question_id, "c": choice}
            )
            attempt.answers[question_id] = choice
            self._maybe_compact()
            return attempt

    def finalize_attempt(self, attempt_id: str, at: datetime) -> Attempt:
        """Grade and persist; idempotent — later calls return the stored row."""
        with self._lock:
            attempt = self.get_attempt(attempt_id)
            if attempt.finalized:
                return attempt
            exam = self.get_exam(attempt.exam_id)
            key = {qid: self.questions[qid].correct_index for qid in exam.question_ids}
            total = len(exam.question_ids)
            attempt.raw_score = grade(attempt.answers, key)
            attempt.weighted_score = weighted_score(attempt.raw_score, total, exam.weight)
            attempt.outcome = subject_outcome(attempt.raw_score, total, exam.passing_rate)
            attempt.submitted_at = min(at, attempt.deadline)
            self._journal_put("attempts", attempt)
            return attempt

    def expire_overdue(self, now: datetime, examinee_id: str | None = None) -> int:
        """Finalize in-progress attempts past deadline+grace; returns count."""
        with self._lock:
            overdue = [
                a.attempt_id
                for a in self.attempts.values()
                if not a.finalized
                and (examinee_id is None or a.examinee_id == examinee_id)
                and self._past_grace(a, now)
            ]
            for attempt_id in overdue:
                self.finalize_attempt(attempt_id, now)
            return len(overdue)

    def latest_finalized_by_exam(self, examinee_id: str) -> dict[str, Attempt]:
        """Per exam, the finalized attempt with the highest attempt_no."""
        best: dict[str, Attempt] = {}
        for attempt in self.attempts.values():
            if attempt.examinee_id != examinee_id or not attempt.finalized:
                continue
            cur = best.get(attempt.exam_id)
            if cur is None or attempt.attempt_no > cur.attempt_no:
                best[attempt.exam_id] = attempt
        return best

    # -- backup -----------------------------------------------------------------

    def export_table_csv(self, table: str) -> str:
        """CSV backup of one entity table (CRLF lines, quoted as needed)."""
        if table not in TABLES:
            raise errors.ValidationFailed(f"unknown table {table!r}")
        rows = [row.to_dict() for row in getattr(self, table).values()]
        rows.sort(key=lambda r: r[_ID_FIELD[table]])
        # Columns come from the model's serialized form; nested values are JSON.
        columns = list(rows[0]) if rows else _csv_columns(_MODEL_FOR[table])
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_csv_cell(row[c]) for c in columns])
        return buf.getvalue()


def _csv_columns(model) -> list[str]:
    return [f.name for f in dataclasses.fields(model) if f.name != "question_ids"]


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)
