"""Derived documents: certificates, grade reports, item analysis.

Everything here is a pure read over the store; generating a report never
mutates state. CSV output uses a fixed header row, comma separation,
minimal quoting, CRLF line endings.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from datetime import datetime
from decimal import Decimal

from ..core import (
    DEFAULT_OVERALL_THRESHOLD,
    ItemStats,
    Outcome,
    choice_distribution,
    difficulty_index,
    discrimination_index,
    format_percent,
    format_points,
    weighted_display,
)
from ..errors import UnknownAccount
from ..store import Attempt, Role, Store

REVIEW_DIFFICULTY_LOW = 0.2
REVIEW_DIFFICULTY_HIGH = 0.9
REVIEW_DISCRIMINATION = 0.2

GRADE_REPORT_COLUMNS = [
    "examinee",
    "student_number",
    "attempt",
    "raw_score",
    "weighted_score",
    "outcome",
    "started_at",
    "submitted_at",
]


@dataclass(frozen=True)
class CertificateRow:
    exam_id: str
    exam_name: str
    finalized_at: datetime
    raw_score: int
    total_questions: int
    weight: Decimal
    weighted_points: Decimal
    weighted_display: str
    outcome: Outcome


@dataclass(frozen=True)
class Certificate:
    examinee_name: str
    student_number: str
    course_name: str
    major_name: str | None
    rows: list[CertificateRow]
    overall_rating: Decimal
    overall_outcome: Outcome
    issued_at: datetime


def build_certificate(
    store: Store,
    examinee_id: str,
    now: datetime,
    threshold: Decimal = DEFAULT_OVERALL_THRESHOLD,
) -> Certificate:
    """Examination progress: one row per exam with a finalized attempt.

    Rows follow exam authoring order and use the latest finalized attempt
    per exam; in-progress and unattempted exams are omitted. The overall
    rating sums the listed weighted scores; the overall outcome requires
    the rating to meet ``threshold`` and every listed subject to have
    passed.
    """
    account = store.get_account(examinee_id)
    profile = account.profile
    if account.role is not Role.EXAMINEE or profile is None:
        raise UnknownAccount(f"account {examinee_id!r} is not an examinee")
    course = store.get_course(profile.course_id)
    major_name = None
    if profile.major_id:
        major_name = next(
            (m.name for m in course.majors if m.major_id == profile.major_id), None
        )
    finalized = store.latest_finalized_by_exam(examinee_id)
    rows: list[CertificateRow] = []
    rating = Decimal("0.0")
    all_passed = True
    for exam in store.list_exams(course_id=profile.course_id):
        attempt = finalized.get(exam.exam_id)
        if attempt is None:
            continue
        total = len(exam.question_ids)
        rows.append(
            CertificateRow(
                exam_id=exam.exam_id,
                exam_name=exam.name,
                finalized_at=attempt.submitted_at,
                raw_score=attempt.raw_score,
                total_questions=total,
                weight=exam.weight,
                weighted_points=attempt.weighted_score,
                weighted_display=weighted_display(attempt.raw_score, total, exam.weight),
                outcome=attempt.outcome,
            )
        )
        rating += attempt.weighted_score
        if attempt.outcome is not Outcome.PASSED:
            all_passed = False
    overall = (
        Outcome.PASSED
        if rows and all_passed and rating >= Decimal(threshold)
        else Outcome.FAILED
    )
    return Certificate(
        examinee_name=profile.full_name(),
        student_number=profile.student_number,
        course_name=course.name,
        major_name=major_name,
        rows=rows,
        overall_rating=rating.quantize(Decimal("0.1")),
        overall_outcome=overall,
        issued_at=now,
    )


@dataclass(frozen=True)
class GradeReportRow:
    examinee: str
    student_number: str
    attempt: int
    raw_score: int
    weighted_score: str
    outcome: Outcome
    started_at: datetime
    submitted_at: datetime


@dataclass(frozen=True)
class GradeReport:
    exam_id: str
    exam_name: str
    rows: list[GradeReportRow]


def grade_report(store: Store, exam_id: str) -> GradeReport:
    """One row per finalized attempt, ordered by submission time."""
    exam = store.get_exam(exam_id)
    rows = []
    for attempt in store.list_attempts(exam_id=exam_id, finalized_only=True):
        account = store.get_account(attempt.examinee_id)
        rows.append(
            GradeReportRow(
                examinee=account.profile.full_name(),
                student_number=account.profile.student_number,
                attempt=attempt.attempt_no,
                raw_score=attempt.raw_score,
                weighted_score=format_points(attempt.weighted_score),
                outcome=attempt.outcome,
                started_at=attempt.started_at,
                submitted_at=attempt.submitted_at,
            )
        )
    rows.sort(key=lambda r: (r.submitted_at, r.student_number, r.attempt))
    return GradeReport(exam_id=exam_id, exam_name=exam.name, rows=rows)


def grade_report_csv(report: GradeReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(GRADE_REPORT_COLUMNS)
    for row in report.rows:
        writer.writerow(
            [
                row.examinee,
                row.student_number,
                row.attempt,
                row.raw_score,
                row.weighted_score,
                row.outcome.value,
                row.started_at.isoformat(),
                row.submitted_at.isoformat(),
            ]
        )
    return buf.getvalue()


@dataclass(frozen=True)
class ItemReportRow:
    stats: ItemStats
    position: int
    stem_excerpt: str
    unanswered: int
    flag: str | None


@dataclass(frozen=True)
class ItemAnalysisReport:
    exam_id: str
    exam_name: str
    n_examinees: int
    rows: list[ItemReportRow]


def _review_flag(difficulty: float | None, discrimination: float | None) -> str | None:
    if difficulty is None:
        return None
    if difficulty < REVIEW_DIFFICULTY_LOW or difficulty > REVIEW_DIFFICULTY_HIGH:
        return "review"
    if discrimination is not None and discrimination < REVIEW_DISCRIMINATION:
        return "review"
    return None


def item_analysis_report(store: Store, exam_id: str) -> ItemAnalysisReport:
    """Difficulty/discrimination per question over finalized attempts.

    One response vector per examinee (latest finalized attempt).
    Discrimination is omitted below two examinees.
    """
    exam = store.get_exam(exam_id)
    latest: dict[str, Attempt] = {}
    for attempt in store.list_attempts(exam_id=exam_id, finalized_only=True):
        cur = latest.get(attempt.examinee_id)
        if cur is None or attempt.attempt_no > cur.attempt_no:
            latest[attempt.examinee_id] = attempt
    # Sorted by examinee id: pins the discrimination tie-break order.
    cohort = [latest[k] for k in sorted(latest)]
    n = len(cohort)
    rows = []
    for position, qid in enumerate(exam.question_ids, start=1):
        question = store.get_question(qid)
        chosen = [a.answers.get(qid) for a in cohort]
        responses = [(c, question.correct_index) for c in chosen]
        difficulty = difficulty_index(responses) if n >= 1 else None
        discrimination = None
        if n >= 2:
            discrimination = discrimination_index(
                [(a.raw_score, a.answers.get(qid) == question.correct_index) for a in cohort]
            )
        stats = ItemStats(
            question_id=qid,
            n_responses=n,
            difficulty=difficulty,
            discrimination=discrimination,
            choice_distribution=choice_distribution(chosen, len(question.choices)),
        )
        rows.append(
            ItemReportRow(
                stats=stats,
                position=position,
                stem_excerpt=question.stem[:80],
                unanswered=sum(1 for c in chosen if c is None),
                flag=_review_flag(difficulty, discrimination),
            )
        )
    return ItemAnalysisReport(
        exam_id=exam_id, exam_name=exam.name, n_examinees=n, rows=rows
    )


_CERT_STYLE = """
body { font-family: Georgia, 'Times New Roman', serif; margin: 3em auto; max-width: 52em; color: #222; }
h1 { text-align: center; letter-spacing: 0.2em; font-size: 1.4em; }
.identity { text-align: center; margin-bottom: 2em; }
.identity .name { font-size: 1.6em; font-weight: bold; }
table { width: 100%; border-collapse: collapse; margin: 1.5em 0; }
th, td { border: 1px solid #888; padding: 0.5em 0.8em; text-align: left; }
th { background: #eee; }
td.score, td.outcome { text-align: center; }
.overall { font-size: 1.2em; text-align: right; margin-top: 1em; }
.passed { color: #1a7f37; font-weight: bold; }
.failed { color: #b42318; font-weight: bold; }
footer { margin-top: 3em; font-size: 0.85em; color: #666; text-align: center; }
@media print { footer .noprint { display: none; } }
"""


def _escape(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")
    )


def certificate_html(cert: Certificate) -> str:
    """Self-contained printable document for the browser's print dialog."""
    def outcome_cell(outcome: Outcome) -> str:
        css = "passed" if outcome is Outcome.PASSED else "failed"
        return f'<td class="outcome {css}">{outcome.value}</td>'

    body_rows = "\n".join(
        "<tr>"
        f"<td>{i}</td>"
        f"<td>{_escape(row.exam_name)}</td>"
        f"<td>{row.finalized_at.strftime('%B %d, %Y %I:%M:%S %p')}</td>"
        f'<td class="score">{_escape(row.weighted_display)}</td>'
        f"{outcome_cell(row.outcome)}"
        "</tr>"
        for i, row in enumerate(cert.rows, start=1)
    )
    major = f" &mdash; Major: {_escape(cert.major_name)}" if cert.major_name else ""
    overall_css = "passed" if cert.overall_outcome is Outcome.PASSED else "failed"
    return f"""<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>Examination Progress — {_escape(cert.examinee_name)}</title>
<style>{_CERT_STYLE}</style>
</head>
<body>
<h1>EXAMINATION PROGRESS</h1>
<div class="identity">
  <div class="name">{_escape(cert.examinee_name)}</div>
  <div>{_escape(cert.student_number)}</div>
  <div>{_escape(cert.course_name)}{major}</div>
</div>
<table>
  <thead><tr><th>#</th><th>Examination</th><th>Finalized</th><th>Result</th><th>Status</th></tr></thead>
  <tbody>
{body_rows}
  </tbody>
</table>
<div class="overall">Overall rating: <strong>{format_points(cert.overall_rating)}</strong>
 &mdash; <span class="{overall_css}">{cert.overall_outcome.value}</span></div>
<footer>
  Issued {cert.issued_at.strftime('%B %d, %Y %I:%M %p')} UTC
  <div class="noprint">Use the browser's print preview to produce a paper copy.</div>
</footer>
</body>
</html>
"""
