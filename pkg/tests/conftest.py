"""Shared fixtures: store builders, fake clock, canned entities."""
from __future__ import annotations

from datetime import date, datetime, timedelta, timezone
from decimal import Decimal

import pytest

from mockboard.store import (
    Account,
    AccountStatus,
    Course,
    Exam,
    ExamineeProfile,
    Major,
    Question,
    Role,
    Store,
    digest_password,
)

T0 = datetime(2018, 11, 21, 8, 0, 0, tzinfo=timezone.utc)


class FakeClock:
    """Deterministic clock; advance() moves it forward."""

    def __init__(self, start: datetime = T0):
        self.now = start

    def __call__(self) -> datetime:
        return self.now

    def advance(self, seconds: float = 0, minutes: float = 0, days: float = 0) -> datetime:
        self.now += timedelta(seconds=seconds, minutes=minutes, days=days)
        return self.now


# Cheap digest for tests that churn accounts; round-trips like the real one.
TEST_DIGEST = digest_password("secret", rounds=1000)


def make_course(store: Store, name="Bachelor of Science in Criminology", majors=(), now=T0) -> Course:
    course = Course(
        course_id="",
        name=name,
        majors=[Major("", m) for m in majors],
        created_by="admin",
        created_at=None,
    )
    return store.put_course(course, now)


def make_exam(
    store: Store,
    course_id: str,
    name="Criminal Jurisprudence, Procedure And Evidence",
    exam_date=date(2018, 11, 21),
    duration_minutes=60,
    passing_rate=75,
    weight=20,
    reexam_date=None,
    major_id=None,
    now=T0,
) -> Exam:
    exam = Exam(
        exam_id="",
        course_id=course_id,
        name=name,
        instructions="Read each item carefully.",
        exam_date=exam_date,
        duration_minutes=duration_minutes,
        passing_rate=Decimal(str(passing_rate)),
        weight=Decimal(str(weight)),
        major_id=major_id,
        reexam_date=reexam_date,
    )
    return store.put_exam(exam, now)


def add_questions(store: Store, exam_id: str, count=10, n_choices=4, now=T0) -> list[Question]:
    rows = []
    for i in range(count):
        q = Question(
            question_id="",
            exam_id=exam_id,
            stem=f"Practice item {i + 1}: which option is correct?",
            choices=[f"Option {c}" for c in "ABCDE"[:n_choices]],
            correct_index=i % n_choices,
        )
        rows.append(store.put_question(q, now))
    return rows


def make_examinee(
    store: Store,
    course_id: str,
    username="noemi",
    student_number="2018-0001",
    major_id=None,
    status=AccountStatus.VERIFIED,
    now=T0,
) -> Account:
    profile = ExamineeProfile(
        student_number=student_number,
        last_name="Fallan",
        first_name="Noemi",
        middle_name="M",
        address="Bongabong, Oriental Mindoro",
        contact_number="09170000001",
        birthdate=date(1997, 5, 12),
        course_id=course_id,
        major_id=major_id,
        terms_accepted=True,
    )
    account = Account(
        account_id="",
        username=username,
        password_digest=TEST_DIGEST,
        role=Role.EXAMINEE,
        status=status,
        created_at=None,
        profile=profile,
    )
    return store.put_account(account, now)


def make_admin(store: Store, username="admin", scope_course_id=None, now=T0) -> Account:
    account = Account(
        account_id="",
        username=username,
        password_digest=TEST_DIGEST,
        role=Role.ADMIN,
        status=AccountStatus.VERIFIED,
        created_at=None,
        scope_course_id=scope_course_id,
    )
    return store.put_account(account, now)


@pytest.fixture
def store(tmp_path):
    s = Store(tmp_path / "data")
    yield s
    s.close()


@pytest.fixture
def clock():
    return FakeClock()
