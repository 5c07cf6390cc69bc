"""The LAN-facing HTTP service.

All paths live under ``/mockboard/api``. Bodies are JSON (UTF-8).
Failures use one envelope: ``{"code", "message", "fields"}`` with a
stable machine code. The server clock is authoritative for every
deadline decision; client-supplied timestamps are never read.
"""
from __future__ import annotations

import logging
import time
from contextlib import asynccontextmanager
from datetime import datetime, timezone
from decimal import Decimal
from pathlib import Path
from typing import Callable

from fastapi import Depends, FastAPI, Header, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.responses import HTMLResponse, JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles

from .. import errors
from ..core import Outcome, format_percent, format_points, presentation_order, remaining_seconds
from ..reporting import (
    build_certificate,
    certificate_html,
    grade_report,
    grade_report_csv,
    item_analysis_report,
)
from ..store import (
    Account,
    AccountStatus,
    Announcement,
    Attempt,
    Course,
    Exam,
    ExamineeProfile,
    Major,
    Question,
    Role,
    Store,
    digest_password,
    verify_password,
)
from .auth import SessionRegistry
from .config import ServerConfig
from .schemas import (
    AnnouncementPayload,
    AnswerPayload,
    CoursePayload,
    ExamPayload,
    LoginRequest,
    QuestionPayload,
    RegisterRequest,
    StartAttemptRequest,
)

API = "/mockboard/api"

access_log = logging.getLogger("mockboard.access")

_HTTP_STATUS: dict[type[errors.MockboardError], int] = {
    errors.ValidationFailed: 400,
    errors.WeightOverflow: 400,
    errors.DegenerateExam: 400,
    errors.ClockSkew: 400,
    errors.Unauthenticated: 401,
    errors.BadCredentials: 401,
    errors.AwaitingVerification: 403,
    errors.Disabled: 403,
    errors.Forbidden: 403,
    errors.NotVerified: 403,
    errors.UnknownAccount: 404,
    errors.UnknownCourse: 404,
    errors.UnknownExam: 404,
    errors.UnknownQuestion: 404,
    errors.UnknownAttempt: 404,
    errors.NoData: 404,
    errors.DuplicateKey: 409,
    errors.DeleteRestricted: 409,
    errors.NotOpen: 409,
    errors.AlreadyTaken: 409,
    errors.AlreadyFinalized: 409,
    errors.NotFinalized: 409,
    errors.NonEmptyStore: 409,
    errors.Expired: 410,
}


def _status_for(exc: errors.MockboardError) -> int:
    for klass in type(exc).__mro__:
        if klass in _HTTP_STATUS:
            return _HTTP_STATUS[klass]
    return 500


def utc_now() -> datetime:
    return datetime.now(timezone.utc)


def create_app(
    store: Store,
    config: ServerConfig | None = None,
    clock: Callable[[], datetime] = utc_now,
) -> FastAPI:
    config = config or ServerConfig()

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        # Sync handlers run on the anyio threadpool; LAN exam cohorts need
        # more than the default 40 workers.
        import anyio.to_thread

        anyio.to_thread.current_default_thread_limiter().total_tokens = 64
        yield

    app = FastAPI(
        title="mockboard",
        docs_url=None,
        redoc_url=None,
        openapi_url=None,
        lifespan=lifespan,
    )
    sessions = SessionRegistry()
    app.state.store = store
    app.state.config = config
    app.state.clock = clock
    app.state.sessions = sessions

    @app.exception_handler(errors.MockboardError)
    async def domain_error(request: Request, exc: errors.MockboardError):
        return JSONResponse(
            status_code=_status_for(exc),
            content={"code": exc.code, "message": exc.message, "fields": exc.fields},
        )

    @app.exception_handler(RequestValidationError)
    async def payload_error(request: Request, exc: RequestValidationError):
        fields = {}
        for err in exc.errors():
            loc = [str(p) for p in err["loc"] if p != "body"]
            fields[".".join(loc) or "body"] = err["msg"]
        return JSONResponse(
            status_code=400,
            content={
                "code": "VALIDATION_FAILED",
                "message": "request payload is invalid",
                "fields": fields,
            },
        )

    @app.middleware("http")
    async def log_requests(request: Request, call_next):
        started = time.monotonic()
        response = await call_next(request)
        millis = int((time.monotonic() - started) * 1000)
        access_log.info(
            "%s %s -> %d %dms", request.method, request.url.path, response.status_code, millis
        )
        return response

    # -- auth dependencies ----------------------------------------------------

    def current_account(authorization: str | None = Header(default=None)) -> Account:
        if not authorization or not authorization.startswith("Bearer "):
            raise errors.Unauthenticated("missing bearer token")
        account_id = sessions.resolve(authorization.removeprefix("Bearer "), clock())
        if account_id is None:
            raise errors.Unauthenticated("invalid or expired token")
        return store.get_account(account_id)

    def admin_account(account: Account = Depends(current_account)) -> Account:
        if account.role is not Role.ADMIN:
            raise errors.Forbidden("admin access required")
        return account

    def examinee_account(account: Account = Depends(current_account)) -> Account:
        if account.role is not Role.EXAMINEE:
            raise errors.Forbidden("examinee access required")
        if account.status is not AccountStatus.VERIFIED:
            raise errors.NotVerified("account is not verified")
        return account

    def check_scope(admin: Account, course_id: str) -> None:
        if admin.scope_course_id and admin.scope_course_id != course_id:
            raise errors.Forbidden("outside this admin's program scope")

    def own_attempt(attempt_id: str, examinee: Account) -> Attempt:
        attempt = store.get_attempt(attempt_id)
        if attempt.examinee_id != examinee.account_id:
            raise errors.Forbidden("attempt belongs to another examinee")
        return attempt

    # -- serializers ------------------------------------------------------------

    def course_json(course: Course) -> dict:
        return {
            "course_id": course.course_id,
            "name": course.name,
            "majors": [{"major_id": m.major_id, "name": m.name} for m in course.majors],
            "created_by": course.created_by,
            "created_at": course.created_at.isoformat(),
            "updated_at": course.updated_at.isoformat() if course.updated_at else None,
        }

    def exam_json(exam: Exam) -> dict:
        return {
            "exam_id": exam.exam_id,
            "course_id": exam.course_id,
            "major_id": exam.major_id,
            "name": exam.name,
            "instructions": exam.instructions,
            "exam_date": exam.exam_date.isoformat(),
            "reexam_date": exam.reexam_date.isoformat() if exam.reexam_date else None,
            "duration_minutes": exam.duration_minutes,
            "passing_rate": format_percent(exam.passing_rate),
            "weight": format_percent(exam.weight),
            "total_questions": len(exam.question_ids),
        }

    def question_admin_json(question: Question, position: int) -> dict:
        return {
            "question_id": question.question_id,
            "exam_id": question.exam_id,
            "position": position,
            "stem": question.stem,
            "choices": list(question.choices),
            "correct_index": question.correct_index,
            "category": question.category,
        }

    def account_json(account: Account) -> dict:
        row = {
            "account_id": account.account_id,
            "username": account.username,
            "role": account.role.value,
            "status": account.status.value,
            "created_at": account.created_at.isoformat(),
            "scope_course_id": account.scope_course_id,
        }
        if account.profile is not None:
            profile = account.profile
            course = store.courses.get(profile.course_id)
            row.update(
                {
                    "name": profile.full_name(),
                    "student_number": profile.student_number,
                    "course_id": profile.course_id,
                    "course_name": course.name if course else None,
                    "major_id": profile.major_id,
                }
            )
        return row

    def announcement_json(note: Announcement) -> dict:
        return {
            "announcement_id": note.announcement_id,
            "body": note.body,
            "author": note.author,
            "created_at": note.created_at.isoformat(),
        }

    def attempt_view(attempt: Attempt, now: datetime) -> dict:
        """Exam-taking payload: presentation order, never correct answers."""
        exam = store.get_exam(attempt.exam_id)
        questions = store.list_questions(exam.exam_id)
        order = presentation_order(
            [q.question_id for q in questions],
            [len(q.choices) for q in questions],
            attempt.seed,
        )
        cards = []
        for position, authored_index in enumerate(order.question_order, start=1):
            question = questions[authored_index]
            choice_order = order.choice_orders[authored_index]
            cards.append(
                {
                    "question_id": question.question_id,
                    "position": position,
                    "stem": question.stem,
                    "choices": [question.choices[i] for i in choice_order],
                    "choice_order": list(choice_order),
                }
            )
        return {
            "attempt_id": attempt.attempt_id,
            "exam_id": exam.exam_id,
            "exam_name": exam.name,
            "instructions": exam.instructions,
            "attempt_no": attempt.attempt_no,
            "started_at": attempt.started_at.isoformat(),
            "deadline": attempt.deadline.isoformat(),
            "remaining_seconds": remaining_seconds(
                max(now, attempt.started_at), attempt.started_at, exam.duration_minutes
            ),
            "grace_seconds": store.grace_seconds,
            "total_questions": len(questions),
            "questions": cards,
            "saved_answers": dict(attempt.answers),
        }

    def result_view(attempt: Attempt) -> dict:
        exam = store.get_exam(attempt.exam_id)
        total = len(exam.question_ids)
        return {
            "attempt_id": attempt.attempt_id,
            "exam_id": exam.exam_id,
            "exam_name": exam.name,
            "attempt_no": attempt.attempt_no,
            "raw_score": attempt.raw_score,
            "total_questions": total,
            "weight": format_percent(exam.weight),
            "passing_rate": format_percent(exam.passing_rate),
            "weighted_points": format_points(attempt.weighted_score),
            "weighted_display": f"{format_points(attempt.weighted_score)} of {format_percent(exam.weight)}%",
            "outcome": attempt.outcome.value,
            "started_at": attempt.started_at.isoformat(),
            "submitted_at": attempt.submitted_at.isoformat(),
        }

    def certificate_payload(examinee: Account, now: datetime):
        store.expire_overdue(now, examinee_id=examinee.account_id)
        return build_certificate(
            store, examinee.account_id, now, threshold=config.passing_threshold
        )

    def certificate_json(cert) -> dict:
        return {
            "examinee_name": cert.examinee_name,
            "student_number": cert.student_number,
            "course_name": cert.course_name,
            "major_name": cert.major_name,
            "rows": [
                {
                    "exam_id": row.exam_id,
                    "exam_name": row.exam_name,
                    "finalized_at": row.finalized_at.isoformat(),
                    "raw_score": row.raw_score,
                    "total_questions": row.total_questions,
                    "weighted_display": row.weighted_display,
                    "outcome": row.outcome.value,
                }
                for row in cert.rows
            ],
            "overall_rating": format_points(cert.overall_rating),
            "overall_outcome": cert.overall_outcome.value,
            "issued_at": cert.issued_at.isoformat(),
        }

    # -- public routes -----------------------------------------------------------

    @app.get(API + "/health")
    def health():
        return {"status": "ok"}

    @app.get(API + "/courses")
    def list_courses():
        return {"courses": [course_json(c) for c in store.list_courses()]}

    @app.post(API + "/register", status_code=201)
    def register(payload: RegisterRequest):
        if not payload.password.strip():
            raise errors.ValidationFailed(
                "password is required", fields={"password": "required"}
            )
        if not payload.terms_accepted:
            raise errors.ValidationFailed(
                "terms must be accepted", fields={"terms_accepted": "must be accepted"}
            )
        now = clock()
        profile = ExamineeProfile(
            student_number=payload.student_number,
            last_name=payload.last_name,
            first_name=payload.first_name,
            middle_name=payload.middle_name,
            address=payload.address,
            contact_number=payload.contact_number,
            birthdate=payload.birthdate,
            course_id=payload.course_id,
            major_id=payload.major_id,
            terms_accepted=payload.terms_accepted,
        )
        account = store.put_account(
            Account(
                account_id="",
                username=payload.username.strip(),
                password_digest=digest_password(payload.password),
                role=Role.EXAMINEE,
                status=AccountStatus.PENDING,
                created_at=now,
                profile=profile,
            ),
            now,
        )
        return {
            "account_id": account.account_id,
            "username": account.username,
            "status": account.status.value,
        }

    @app.post(API + "/login")
    def login(payload: LoginRequest):
        account = store.find_account_by_username(payload.username)
        if account is None or not verify_password(payload.password, account.password_digest):
            raise errors.BadCredentials("unknown username or wrong password")
        if account.status is AccountStatus.PENDING:
            raise errors.AwaitingVerification("an admin must verify this account first")
        if account.status is AccountStatus.DISABLED:
            raise errors.Disabled("this account is disabled")
        session = sessions.issue(account.account_id, clock())
        return {
            "token": session.token,
            "account_id": account.account_id,
            "username": account.username,
            "role": account.role.value,
            "scope_course_id": account.scope_course_id,
            "expires_at": session.expires_at.isoformat(),
        }

    @app.post(API + "/logout")
    def logout(
        account: Account = Depends(current_account),
        authorization: str | None = Header(default=None),
    ):
        sessions.revoke(authorization.removeprefix("Bearer "))
        return {"ok": True}

    @app.get(API + "/announcements")
    def list_announcements(account: Account = Depends(current_account)):
        return {"announcements": [announcement_json(a) for a in store.list_announcements()]}

    # -- examinee routes -----------------------------------------------------------

    @app.get(API + "/dashboard")
    def dashboard(examinee: Account = Depends(examinee_account)):
        now = clock()
        store.expire_overdue(now, examinee_id=examinee.account_id)
        rows = []
        for exam, status, attempt in store.eligible_exams(examinee.account_id, now):
            row = exam_json(exam)
            row["status"] = status.value
            row["attempt_id"] = (
                attempt.attempt_id if attempt is not None and not attempt.finalized else None
            )
            rows.append(row)
        profile = examinee.profile
        course = store.get_course(profile.course_id)
        major_name = next(
            (m.name for m in course.majors if m.major_id == profile.major_id), None
        )
        return {
            "profile": {
                "name": profile.full_name(),
                "student_number": profile.student_number,
                "course_name": course.name,
                "major_name": major_name,
            },
            "exams": rows,
            "announcements": [announcement_json(a) for a in store.list_announcements()],
        }

    @app.post(API + "/attempts")
    def start_attempt(
        payload: StartAttemptRequest, examinee: Account = Depends(examinee_account)
    ):
        now = clock()
        attempt, resumed = store.start_attempt(examinee.account_id, payload.exam_id, now)
        view = attempt_view(attempt, now)
        view["resumed"] = resumed
        return view

    @app.put(API + "/attempts/{attempt_id}/answers/{question_id}")
    def record_answer(
        attempt_id: str,
        question_id: str,
        payload: AnswerPayload,
        examinee: Account = Depends(examinee_account),
    ):
        now = clock()
        attempt = own_attempt(attempt_id, examinee)
        attempt = store.record_answer(attempt_id, question_id, payload.choice, now)
        exam = store.get_exam(attempt.exam_id)
        return {
            "attempt_id": attempt_id,
            "question_id": question_id,
            "choice": payload.choice,
            "remaining_seconds": remaining_seconds(
                max(now, attempt.started_at), attempt.started_at, exam.duration_minutes
            ),
        }

    @app.post(API + "/attempts/{attempt_id}/submit")
    def submit_attempt(attempt_id: str, examinee: Account = Depends(examinee_account)):
        attempt = own_attempt(attempt_id, examinee)
        finalized = store.finalize_attempt(attempt_id, clock())
        return result_view(finalized)

    @app.get(API + "/attempts/{attempt_id}/result")
    def attempt_result(attempt_id: str, examinee: Account = Depends(examinee_account)):
        now = clock()
        attempt = own_attempt(attempt_id, examinee)
        if not attempt.finalized:
            store.expire_overdue(now, examinee_id=examinee.account_id)
            attempt = store.get_attempt(attempt_id)
        if not attempt.finalized:
            raise errors.NotFinalized("attempt has not been submitted")
        return result_view(attempt)

    @app.get(API + "/certificate")
    def certificate(examinee: Account = Depends(examinee_account)):
        return certificate_json(certificate_payload(examinee, clock()))

    @app.get(API + "/certificate.html", response_class=HTMLResponse)
    def certificate_printable(examinee: Account = Depends(examinee_account)):
        return HTMLResponse(certificate_html(certificate_payload(examinee, clock())))

    # -- admin: courses ---------------------------------------------------------

    @app.post(API + "/courses", status_code=201)
    def create_course(payload: CoursePayload, admin: Account = Depends(admin_account)):
        if admin.scope_course_id:
            raise errors.Forbidden("scoped admins cannot create courses")
        course = store.put_course(
            Course(
                course_id="",
                name=payload.name,
                majors=[Major(m.major_id or "", m.name) for m in payload.majors],
                created_by=admin.username,
                created_at=None,
            ),
            clock(),
        )
        return course_json(course)

    @app.put(API + "/courses/{course_id}")
    def update_course(
        course_id: str, payload: CoursePayload, admin: Account = Depends(admin_account)
    ):
        check_scope(admin, course_id)
        existing = store.get_course(course_id)
        existing.name = payload.name
        existing.majors = [Major(m.major_id or "", m.name) for m in payload.majors]
        return course_json(store.put_course(existing, clock()))

    @app.delete(API + "/courses/{course_id}")
    def delete_course(course_id: str, admin: Account = Depends(admin_account)):
        check_scope(admin, course_id)
        store.delete_course(course_id)
        return {"ok": True}

    # -- admin: exams------------------------------------------------------------

    @app.get(API + "/exams")
    def list_exams(admin: Account = Depends(admin_account)):
        exams = store.list_exams(course_id=admin.scope_course_id or None)
        return {"exams": [exam_json(e) for e in exams]}

    def _exam_with_weight_warning(exam: Exam) -> dict:
        body = exam_json(exam)
        total = store.course_weight_total(exam.course_id)
        body["course_weight_total"] = format_percent_or_number(total)
        if total > 100:
            body["warning"] = f"course exam weights total {body['course_weight_total']} > 100"
        return body

    def _resolve_weight(payload: ExamPayload) -> "Decimal":
        if payload.weight is not None:
            return payload.weight
        # The first (sole) exam of a course carries the whole rating.
        if not store.list_exams(course_id=payload.course_id):
            return Decimal(100)
        raise errors.ValidationFailed(
            "weight is required once a course has other exams",
            fields={"weight": "required"},
        )

    @app.post(API + "/exams", status_code=201)
    def create_exam(payload: ExamPayload, admin: Account = Depends(admin_account)):
        check_scope(admin, payload.course_id)
        exam = store.put_exam(
            Exam(
                exam_id="",
                course_id=payload.course_id,
                name=payload.name,
                instructions=payload.instructions,
                exam_date=payload.exam_date,
                duration_minutes=payload.duration_minutes,
                passing_rate=payload.passing_rate,
                weight=_resolve_weight(payload),
                major_id=payload.major_id,
                reexam_date=payload.reexam_date,
            ),
            clock(),
        )
        return _exam_with_weight_warning(exam)

    @app.get(API + "/exams/{exam_id}")
    def get_exam(exam_id: str, admin: Account = Depends(admin_account)):
        exam = store.get_exam(exam_id)
        check_scope(admin, exam.course_id)
        return exam_json(exam)

    @app.put(API + "/exams/{exam_id}")
    def update_exam(
        exam_id: str, payload: ExamPayload, admin: Account = Depends(admin_account)
    ):
        exam = store.get_exam(exam_id)
        check_scope(admin, exam.course_id)
        check_scope(admin, payload.course_id)
        exam.course_id = payload.course_id
        exam.name = payload.name
        exam.instructions = payload.instructions
        exam.exam_date = payload.exam_date
        exam.duration_minutes = payload.duration_minutes
        exam.passing_rate = payload.passing_rate
        if payload.weight is not None:
            exam.weight = payload.weight
        exam.major_id = payload.major_id
        exam.reexam_date = payload.reexam_date
        return _exam_with_weight_warning(store.put_exam(exam, clock()))

    @app.delete(API + "/exams/{exam_id}")
    def delete_exam(exam_id: str, admin: Account = Depends(admin_account)):
        exam = store.get_exam(exam_id)
        check_scope(admin, exam.course_id)
        store.delete_exam(exam_id)
        return {"ok": True}

    # -- admin: questions ---------------------------------------------------------

    @app.get(API + "/exams/{exam_id}/questions")
    def list_questions(exam_id: str, admin: Account = Depends(admin_account)):
        exam = store.get_exam(exam_id)
        check_scope(admin, exam.course_id)
        rows = [
            question_admin_json(q, i)
            for i, q in enumerate(store.list_questions(exam_id), start=1)
        ]
        return {"exam_id": exam_id, "questions": rows}

    @app.post(API + "/exams/{exam_id}/questions", status_code=201)
    def create_question(
        exam_id: str, payload: QuestionPayload, admin: Account = Depends(admin_account)
    ):
        exam = store.get_exam(exam_id)
        check_scope(admin, exam.course_id)
        question = store.put_question(
            Question(
                question_id="",
                exam_id=exam_id,
                stem=payload.stem,
                choices=payload.choices,
                correct_index=payload.correct_index,
                category=payload.category,
            ),
            clock(),
        )
        position = exam.question_ids.index(question.question_id) + 1
        return question_admin_json(question, position)

    @app.put(API + "/exams/{exam_id}/questions/{question_id}")
    def update_question(
        exam_id: str,
        question_id: str,
        payload: QuestionPayload,
        admin: Account = Depends(admin_account),
    ):
        exam = store.get_exam(exam_id)
        check_scope(admin, exam.course_id)
        question = store.get_question(question_id)
        if question.exam_id != exam_id:
            raise errors.UnknownQuestion("question belongs to a different exam")
        question.stem = payload.stem
        question.choices = payload.choices
        question.correct_index = payload.correct_index
        question.category = payload.category
        stored = store.put_question(question, clock())
        position = exam.question_ids.index(question_id) + 1
        return question_admin_json(stored, position)

    @app.delete(API + "/exams/{exam_id}/questions/{question_id}")
    def delete_question(
        exam_id: str, question_id: str, admin: Account = Depends(admin_account)
    ):
        exam = store.get_exam(exam_id)
        check_scope(admin, exam.course_id)
        question = store.get_question(question_id)
        if question.exam_id != exam_id:
            raise errors.UnknownQuestion("question belongs to a different exam")
        store.delete_question(question_id)
        return {"ok": True}

    # -- admin: accounts / announcements / reports ---------------------------------

    @app.get(API + "/accounts")
    def list_accounts(status: str | None = None, admin: Account = Depends(admin_account)):
        wanted = AccountStatus(status.capitalize()) if status else None
        rows = store.list_accounts(
            status=wanted, role=Role.EXAMINEE, course_id=admin.scope_course_id or None
        )
        return {"accounts": [account_json(a) for a in rows]}

    @app.post(API + "/accounts/{account_id}/verify")
    def verify_account(account_id: str, admin: Account = Depends(admin_account)):
        target = store.get_account(account_id)
        if target.profile is not None:
            check_scope(admin, target.profile.course_id)
        return account_json(store.verify_examinee(account_id, clock()))

    @app.post(API + "/announcements", status_code=201)
    def create_announcement(
        payload: AnnouncementPayload, admin: Account = Depends(admin_account)
    ):
        note = store.put_announcement(
            Announcement(
                announcement_id="", body=payload.body, author=admin.username, created_at=None
            ),
            clock(),
        )
        return announcement_json(note)

    @app.get(API + "/reports/grades/{exam_id}.csv", response_class=PlainTextResponse)
    def grades_csv(exam_id: str, admin: Account = Depends(admin_account)):
        exam = store.get_exam(exam_id)
        check_scope(admin, exam.course_id)
        csv_text = grade_report_csv(grade_report(store, exam_id))
        return PlainTextResponse(
            csv_text,
            media_type="text/csv",
            headers={
                "Content-Disposition": f'attachment; filename="grades-{exam_id}.csv"'
            },
        )

    @app.get(API + "/reports/grades/{exam_id}")
    def grades(exam_id: str, admin: Account = Depends(admin_account)):
        exam = store.get_exam(exam_id)
        check_scope(admin, exam.course_id)
        report = grade_report(store, exam_id)
        return {
            "exam_id": report.exam_id,
            "exam_name": report.exam_name,
            "rows": [
                {
                    "examinee": r.examinee,
                    "student_number": r.student_number,
                    "attempt": r.attempt,
                    "raw_score": r.raw_score,
                    "weighted_score": r.weighted_score,
                    "outcome": r.outcome.value,
                    "started_at": r.started_at.isoformat(),
                    "submitted_at": r.submitted_at.isoformat(),
                }
                for r in report.rows
            ],
        }

    @app.get(API + "/reports/item-analysis/{exam_id}")
    def item_analysis(exam_id: str, admin: Account = Depends(admin_account)):
        exam = store.get_exam(exam_id)
        check_scope(admin, exam.course_id)
        report = item_analysis_report(store, exam_id)
        return {
            "exam_id": report.exam_id,
            "exam_name": report.exam_name,
            "n_examinees": report.n_examinees,
            "rows": [
                {
                    "question_id": r.stats.question_id,
                    "position": r.position,
                    "stem_excerpt": r.stem_excerpt,
                    "n_responses": r.stats.n_responses,
                    "difficulty": r.stats.difficulty,
                    "discrimination": r.stats.discrimination,
                    "choice_distribution": list(r.stats.choice_distribution),
                    "unanswered": r.unanswered,
                    "flag": r.flag,
                }
                for r in report.rows
            ],
        }

    if config.ui_dir:
        ui = Path(config.ui_dir)
        if ui.is_dir():
            app.mount("/mockboard", StaticFiles(directory=ui, html=True), name="ui")

    return app


def format_percent_or_number(value: float) -> str:
    text = f"{value:.2f}".rstrip("0").rstrip(".")
    return text or "0"
