"""Demo dataset: one criminology cohort with graded history.

Seeds the five BSCrim subject exams (2018-11-21, 60 minutes, 75%
passing, weights 20/20/15/15/30), a verified examinee, and three
finalized attempts scoring 0/10, 3/10 and 9/10 on the exams weighted
20, 20 and 15 — the certificate then reads 0.0 of 20% Failed,
6.0 of 20% Failed, 13.5 of 15% Passed, overall rating 19.5.

Demo credentials: admin/admin and noemi/noemi. LAN demo only; rotate or
re-init before any real cohort.
"""
from __future__ import annotations

from datetime import date, datetime, timedelta, timezone
from decimal import Decimal
from pathlib import Path

from ..errors import NonEmptyStore
from ..store import (
    Account,
    AccountStatus,
    Announcement,
    Course,
    Exam,
    ExamineeProfile,
    Question,
    Role,
    Store,
    digest_password,
)

EXAMS = [
    ("Criminal Jurisprudence, Procedure And Evidence for BSCRIM", 20),
    ("Law Enforcement Administration for BSCRIM", 20),
    ("Crime Detection and Investigation for BSCRIM", 15),
    ("Sociology of Crimes and Ethics for BSCRIM", 15),
    ("Correctional Administration for BSCRIM", 30),
]
EXAM_DATE = date(2018, 11, 21)
QUESTIONS_PER_EXAM = 10

# (exam index, correct answers, started, submitted) for the graded history.
ATTEMPTS = [
    (0, 0, datetime(2018, 11, 23, 16, 1, 13, tzinfo=timezone.utc),
     datetime(2018, 11, 23, 16, 11, 13, tzinfo=timezone.utc)),
    (1, 3, datetime(2018, 11, 25, 14, 1, 1, tzinfo=timezone.utc),
     datetime(2018, 11, 25, 14, 11, 1, tzinfo=timezone.utc)),
    (2, 9, datetime(2018, 11, 25, 21, 1, 30, tzinfo=timezone.utc),
     datetime(2018, 11, 25, 21, 11, 30, tzinfo=timezone.utc)),
]

_CATEGORIES = ["recall", "application", "analysis"]


def seed_demo(data_dir: str | Path) -> dict:
    """Populate an empty data directory; refuses anything pre-existing."""
    path = Path(data_dir)
    if path.exists() and any(path.iterdir()):
        raise NonEmptyStore(f"data directory {path} is not empty")
    created = datetime(2018, 8, 23, 10, 25, 6, tzinfo=timezone.utc)
    with Store(path) as store:
        admin = store.put_account(
            Account(
                account_id="acct-admin",
                username="admin",
                password_digest=digest_password("admin"),
                role=Role.ADMIN,
                status=AccountStatus.VERIFIED,
                created_at=created,
            ),
            created,
        )
        course = store.put_course(
            Course(
                course_id="course-bscrim",
                name="Bachelor of Science in Criminology",
                majors=[],
                created_by=admin.username,
                created_at=created,
            ),
            created,
        )
        exams = []
        for index, (name, weight) in enumerate(EXAMS, start=1):
            exam = store.put_exam(
                Exam(
                    exam_id=f"exam-bscrim-{index}",
                    course_id=course.course_id,
                    name=name,
                    instructions="Choose the single best answer for each item.",
                    exam_date=EXAM_DATE,
                    duration_minutes=60,
                    passing_rate=Decimal("75"),
                    weight=Decimal(weight),
                ),
                created,
            )
            exams.append(exam)
            for i in range(QUESTIONS_PER_EXAM):
                store.put_question(
                    Question(
                        question_id=f"ques-{index}-{i + 1:02d}",
                        exam_id=exam.exam_id,
                        stem=f"{name} — practice item {i + 1}: which option is correct?",
                        choices=[f"Option {c}" for c in "ABCD"],
                        correct_index=i % 4,
                        category=_CATEGORIES[i % len(_CATEGORIES)],
                    ),
                    created,
                )
        examinee = store.put_account(
            Account(
                account_id="acct-noemi",
                username="noemi",
                password_digest=digest_password("noemi"),
                role=Role.EXAMINEE,
                status=AccountStatus.VERIFIED,
                created_at=created,
                profile=ExamineeProfile(
                    student_number="2018-0001",
                    last_name="Fallan",
                    first_name="Noemi",
                    middle_name="M",
                    address="Bongabong, Oriental Mindoro",
                    contact_number="09170000001",
                    birthdate=date(1997, 5, 12),
                    course_id=course.course_id,
                    terms_accepted=True,
                ),
            ),
            created,
        )
        for exam_index, n_correct, started, submitted in ATTEMPTS:
            exam = exams[exam_index]
            attempt, _ = store.start_attempt(
                examinee.account_id, exam.exam_id, started, seed=1000 + exam_index
            )
            questions = store.list_questions(exam.exam_id)
            for question in questions[:n_correct]:
                store.record_answer(
                    attempt.attempt_id,
                    question.question_id,
                    question.correct_index,
                    started + timedelta(minutes=5),
                )
            store.finalize_attempt(attempt.attempt_id, submitted)
        store.put_announcement(
            Announcement(
                announcement_id="note-welcome",
                body="NOTICE: Have a nice day!",
                author=admin.username,
                created_at=datetime(2018, 11, 23, 16, 32, 0, tzinfo=timezone.utc),
            ),
            created,
        )
    return {
        "courses": 1,
        "exams": len(EXAMS),
        "questions": len(EXAMS) * QUESTIONS_PER_EXAM,
        "accounts": 2,
        "attempts": len(ATTEMPTS),
        "announcements": 1,
    }
