"""HTTP API integration: flows, envelope, authorization, secrecy, timing."""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from datetime import date

import pytest
from fastapi.testclient import TestClient

from mockboard.server import ServerConfig, create_app
from mockboard.store import AccountStatus, Store
from conftest import (
    T0,
    FakeClock,
    add_questions,
    make_admin,
    make_course,
    make_exam,
    make_examinee,
)

PASSWORD = "secret"  # matches conftest.TEST_DIGEST


class Api:
    """Client bundle: app over a fake clock plus convenience calls."""

    def __init__(self, tmp_path, grace_seconds=30):
        self.clock = FakeClock()
        self.store = Store(tmp_path / "data", grace_seconds=grace_seconds)
        self.app = create_app(self.store, ServerConfig(), clock=self.clock)
        self.client = TestClient(self.app)

    def close(self):
        self.client.close()
        self.store.close()

    def login(self, username, password=PASSWORD) -> str:
        res = self.client.post(
            "/mockboard/api/login", json={"username": username, "password": password}
        )
        assert res.status_code == 200, res.text
        return res.json()["token"]

    def auth(self, token) -> dict:
        return {"Authorization": f"Bearer {token}"}


@pytest.fixture
def api(tmp_path):
    bundle = Api(tmp_path)
    yield bundle
    bundle.close()


@pytest.fixture
def seeded(api):
    """Course + 10-question exam + verified examinee + admins."""
    course = make_course(api.store)
    exam = make_exam(api.store, course.course_id, weight=15)
    questions = add_questions(api.store, exam.exam_id)
    examinee = make_examinee(api.store, course.course_id)
    make_admin(api.store, "admin")
    other_course = make_course(api.store, "Bachelor of Science in Secondary Education")
    make_admin(api.store, "bsed-admin", scope_course_id=other_course.course_id)
    api.exam, api.questions, api.examinee = exam, questions, examinee
    api.course, api.other_course = course, other_course
    return api


def register_payload(**overrides) -> dict:
    payload = {
        "username": "juan",
        "password": "pw-123456",
        "student_number": "2018-0002",
        "last_name": "Dela Cruz",
        "first_name": "Juan",
        "middle_name": "S",
        "address": "Calapan City",
        "contact_number": "09170000002",
        "birthdate": "1996-02-14",
        "course_id": "",
        "terms_accepted": True,
    }
    payload.update(overrides)
    return payload


class TestRegistration:
    def test_register_pending(self, seeded):
        res = seeded.client.post(
            "/mockboard/api/register",
            json=register_payload(course_id=seeded.course.course_id),
        )
        assert res.status_code == 201
        assert res.json()["status"] == "Pending"

    def test_terms_required(self, seeded):
        res = seeded.client.post(
            "/mockboard/api/register",
            json=register_payload(course_id=seeded.course.course_id, terms_accepted=False),
        )
        assert res.status_code == 400
        body = res.json()
        assert body["code"] == "VALIDATION_FAILED"
        assert "terms_accepted" in body["fields"]

    def test_duplicate_username(self, seeded):
        res = seeded.client.post(
            "/mockboard/api/register",
            json=register_payload(course_id=seeded.course.course_id, username="NOEMI"),
        )
        assert res.status_code == 409
        assert res.json()["code"] == "DUPLICATE_KEY"

    @pytest.mark.parametrize("number", ["18-001", "2018-00010", "ABCD-0001"])
    def test_bad_student_number(self, seeded, number):
        res = seeded.client.post(
            "/mockboard/api/register",
            json=register_payload(course_id=seeded.course.course_id, student_number=number),
        )
        assert res.status_code == 400
        assert "student_number" in res.json()["fields"]

    def test_missing_field_envelope(self, seeded):
        payload = register_payload(course_id=seeded.course.course_id)
        del payload["address"]
        res = seeded.client.post("/mockboard/api/register", json=payload)
        assert res.status_code == 400
        assert res.json()["code"] == "VALIDATION_FAILED"
        assert "address" in res.json()["fields"]

    def test_pending_cannot_login_then_verified_can(self, seeded):
        res = seeded.client.post(
            "/mockboard/api/register",
            json=register_payload(course_id=seeded.course.course_id),
        )
        account_id = res.json()["account_id"]
        res = seeded.client.post(
            "/mockboard/api/login", json={"username": "juan", "password": "pw-123456"}
        )
        assert res.status_code == 403
        assert res.json()["code"] == "AWAITING_VERIFICATION"

        admin_token = seeded.login("admin")
        res = seeded.client.post(
            f"/mockboard/api/accounts/{account_id}/verify", headers=seeded.auth(admin_token)
        )
        assert res.status_code == 200
        assert res.json()["status"] == "Verified"
        assert seeded.login("juan", "pw-123456")


class TestLogin:
    def test_wrong_password_indistinguishable_from_unknown_user(self, seeded):
        wrong = seeded.client.post(
            "/mockboard/api/login", json={"username": "noemi", "password": "nope"}
        )
        unknown = seeded.client.post(
            "/mockboard/api/login", json={"username": "ghost", "password": "nope"}
        )
        assert wrong.status_code == unknown.status_code == 401
        assert wrong.json() == unknown.json()

    def test_token_expires(self, seeded):
        token = seeded.login("noemi")
        seeded.clock.advance(minutes=8 * 60 + 1)
        res = seeded.client.get("/mockboard/api/dashboard", headers=seeded.auth(token))
        assert res.status_code == 401
        assert res.json()["code"] == "UNAUTHENTICATED"

    def test_logout_revokes(self, seeded):
        token = seeded.login("noemi")
        assert (
            seeded.client.post("/mockboard/api/logout", headers=seeded.auth(token)).status_code
            == 200
        )
        res = seeded.client.get("/mockboard/api/dashboard", headers=seeded.auth(token))
        assert res.status_code == 401


class TestVerification:
    def test_scoped_admin_cannot_cross_course(self, seeded):
        res = seeded.client.post(
            "/mockboard/api/register",
            json=register_payload(course_id=seeded.course.course_id),
        )
        account_id = res.json()["account_id"]
        token = seeded.login("bsed-admin")
        res = seeded.client.post(
            f"/mockboard/api/accounts/{account_id}/verify", headers=seeded.auth(token)
        )
        assert res.status_code == 403
        assert res.json()["code"] == "FORBIDDEN"

    def test_verify_idempotent(self, seeded):
        token = seeded.login("admin")
        res = seeded.client.post(
            f"/mockboard/api/accounts/{seeded.examinee.account_id}/verify",
            headers=seeded.auth(token),
        )
        assert res.status_code == 200
        assert res.json()["status"] == "Verified"

    def test_pending_list_scoped(self, seeded):
        seeded.client.post(
            "/mockboard/api/register",
            json=register_payload(course_id=seeded.course.course_id),
        )
        admin_rows = seeded.client.get(
            "/mockboard/api/accounts?status=pending", headers=seeded.auth(seeded.login("admin"))
        ).json()["accounts"]
        assert [a["username"] for a in admin_rows] == ["juan"]
        scoped_rows = seeded.client.get(
            "/mockboard/api/accounts?status=pending",
            headers=seeded.auth(seeded.login("bsed-admin")),
        ).json()["accounts"]
        assert scoped_rows == []


class TestExamFlow:
    def start(self, api, token=None):
        token = token or api.login("noemi")
        res = api.client.post(
            "/mockboard/api/attempts",
            json={"exam_id": api.exam.exam_id},
            headers=api.auth(token),
        )
        assert res.status_code == 200, res.text
        return token, res.json()

    def test_start_view_shape(self, seeded):
        seeded.clock.now = T0.replace(hour=14)
        token, view = self.start(seeded)
        assert view["remaining_seconds"] == 3600
        assert view["total_questions"] == 10
        assert len(view["questions"]) == 10
        assert not view["resumed"]
        # Questions arrive permuted but complete.
        ids = {q["question_id"] for q in view["questions"]}
        assert ids == {q.question_id for q in seeded.questions}
        # Choice permutation maps display text back to authored order.
        for card in view["questions"]:
            authored = next(
                q for q in seeded.questions if q.question_id == card["question_id"]
            )
            assert sorted(card["choices"]) == sorted(authored.choices)
            for display_pos, authored_ix in enumerate(card["choice_order"]):
                assert card["choices"][display_pos] == authored.choices[authored_ix]

    def test_resume_same_attempt_with_saved_answers(self, seeded):
        token, view = self.start(seeded)
        qid = view["questions"][0]["question_id"]
        seeded.client.put(
            f"/mockboard/api/attempts/{view['attempt_id']}/answers/{qid}",
            json={"choice": 1},
            headers=seeded.auth(token),
        )
        _, again = self.start(seeded, token)
        assert again["attempt_id"] == view["attempt_id"]
        assert again["resumed"]
        assert again["saved_answers"] == {qid: 1}

    def test_start_before_date(self, seeded):
        seeded.clock.now = T0.replace(day=20)
        token = seeded.login("noemi")
        res = seeded.client.post(
            "/mockboard/api/attempts",
            json={"exam_id": seeded.exam.exam_id},
            headers=seeded.auth(token),
        )
        assert res.status_code == 409
        assert res.json()["code"] == "NOT_OPEN"

    def test_full_run_13_5_of_15(self, seeded):
        token, view = self.start(seeded)
        by_id = {q.question_id: q for q in seeded.questions}
        # Answer 9 of 10 correctly in authored indices.
        for card in view["questions"][:9]:
            authored = by_id[card["question_id"]]
            res = seeded.client.put(
                f"/mockboard/api/attempts/{view['attempt_id']}/answers/{card['question_id']}",
                json={"choice": authored.correct_index},
                headers=seeded.auth(token),
            )
            assert res.status_code == 200
            assert res.json()["remaining_seconds"] <= 3600
        res = seeded.client.post(
            f"/mockboard/api/attempts/{view['attempt_id']}/submit", headers=seeded.auth(token)
        )
        assert res.status_code == 200
        body = res.json()
        assert body["raw_score"] == 9
        assert body["weighted_display"] == "13.5 of 15%"
        assert body["outcome"] == "Passed"
        # Submit again: identical stored result.
        again = seeded.client.post(
            f"/mockboard/api/attempts/{view['attempt_id']}/submit", headers=seeded.auth(token)
        )
        assert again.json() == body
        # Result endpoint serves the same view.
        result = seeded.client.get(
            f"/mockboard/api/attempts/{view['attempt_id']}/result", headers=seeded.auth(token)
        )
        assert result.json() == body
        # Exam now shows as ViewCertificate; restart refused.
        res = seeded.client.post(
            "/mockboard/api/attempts",
            json={"exam_id": seeded.exam.exam_id},
            headers=seeded.auth(token),
        )
        assert res.status_code == 409
        assert res.json()["code"] == "ALREADY_TAKEN"

    def test_grace_window_over_http(self, seeded):
        token, view = self.start(seeded)
        qids = [c["question_id"] for c in view["questions"]]
        seeded.clock.advance(minutes=60, seconds=29)
        res = seeded.client.put(
            f"/mockboard/api/attempts/{view['attempt_id']}/answers/{qids[0]}",
            json={"choice": 0},
            headers=seeded.auth(token),
        )
        assert res.status_code == 200
        seeded.clock.advance(seconds=2)  # deadline + 31
        res = seeded.client.put(
            f"/mockboard/api/attempts/{view['attempt_id']}/answers/{qids[1]}",
            json={"choice": 0},
            headers=seeded.auth(token),
        )
        assert res.status_code == 410
        assert res.json()["code"] == "EXPIRED"
        result = seeded.client.get(
            f"/mockboard/api/attempts/{view['attempt_id']}/result", headers=seeded.auth(token)
        )
        assert result.status_code == 200  # auto-finalized on expiry

    def test_client_timestamps_ignored(self, seeded):
        """Doctored payload/query timestamps cannot move the deadline."""
        token, view = self.start(seeded)
        qid = view["questions"][0]["question_id"]
        seeded.clock.advance(minutes=61)  # past deadline + grace
        res = seeded.client.put(
            f"/mockboard/api/attempts/{view['attempt_id']}/answers/{qid}"
            "?now=2018-11-21T08:00:00Z&at=2018-11-21T08:00:00Z",
            json={"choice": 0, "at": "2018-11-21T08:00:00Z", "now": T0.isoformat()},
            headers=seeded.auth(token),
        )
        assert res.status_code == 410

    def test_result_before_submit(self, seeded):
        token, view = self.start(seeded)
        res = seeded.client.get(
            f"/mockboard/api/attempts/{view['attempt_id']}/result", headers=seeded.auth(token)
        )
        assert res.status_code == 409
        assert res.json()["code"] == "NOT_FINALIZED"

    def test_foreign_attempt_forbidden(self, seeded):
        token, view = self.start(seeded)
        seeded.client.post(
            "/mockboard/api/register",
            json=register_payload(course_id=seeded.course.course_id),
        )
        admin_token = seeded.login("admin")
        juan = seeded.store.find_account_by_username("juan")
        seeded.client.post(
            f"/mockboard/api/accounts/{juan.account_id}/verify",
            headers=seeded.auth(admin_token),
        )
        juan_token = seeded.login("juan", "pw-123456")
        res = seeded.client.post(
            f"/mockboard/api/attempts/{view['attempt_id']}/submit",
            headers=seeded.auth(juan_token),
        )
        assert res.status_code == 403

    def test_concurrent_submits_identical(self, seeded):
        token, view = self.start(seeded)
        attempt_id = view["attempt_id"]

        def submit(_):
            return seeded.client.post(
                f"/mockboard/api/attempts/{attempt_id}/submit", headers=seeded.auth(token)
            ).json()

        with ThreadPoolExecutor(max_workers=8) as pool:
            bodies = list(pool.map(submit, range(8)))
        assert all(b == bodies[0] for b in bodies)
        assert len(seeded.store.list_attempts(exam_id=seeded.exam.exam_id)) == 1


class TestAnswerKeySecrecy:
    def walk(self, node, hits):
        if isinstance(node, dict):
            for key, value in node.items():
                if "correct" in key.lower():
                    hits.append(key)
                self.walk(value, hits)
        elif isinstance(node, list):
            for item in node:
                self.walk(item, hits)

    def test_pre_finalization_payloads_carry_no_key(self, seeded):
        token = seeded.login("noemi")
        hits: list[str] = []
        dashboard = seeded.client.get(
            "/mockboard/api/dashboard", headers=seeded.auth(token)
        ).json()
        view = seeded.client.post(
            "/mockboard/api/attempts",
            json={"exam_id": seeded.exam.exam_id},
            headers=seeded.auth(token),
        ).json()
        ack = seeded.client.put(
            f"/mockboard/api/attempts/{view['attempt_id']}/answers/{view['questions'][0]['question_id']}",
            json={"choice": 0},
            headers=seeded.auth(token),
        ).json()
        resumed = seeded.client.post(
            "/mockboard/api/attempts",
            json={"exam_id": seeded.exam.exam_id},
            headers=seeded.auth(token),
        ).json()
        for payload in (dashboard, view, ack, resumed):
            self.walk(payload, hits)
        assert hits == []


class TestDashboard:
    def test_rows_and_announcements(self, seeded):
        admin_token = seeded.login("admin")
        res = seeded.client.post(
            "/mockboard/api/announcements",
            json={"body": "NOTICE: Have a nice day!"},
            headers=seeded.auth(admin_token),
        )
        assert res.status_code == 201
        token = seeded.login("noemi")
        body = seeded.client.get("/mockboard/api/dashboard", headers=seeded.auth(token)).json()
        assert body["profile"]["name"] == "Fallan, Noemi M"
        assert body["profile"]["course_name"] == "Bachelor of Science in Criminology"
        assert len(body["exams"]) == 1
        row = body["exams"][0]
        assert row["status"] == "TakeExam"
        assert row["duration_minutes"] == 60
        assert row["passing_rate"] == "75"
        assert row["total_questions"] == 10
        assert body["announcements"][0]["body"] == "NOTICE: Have a nice day!"
        assert body["announcements"][0]["author"] == "admin"

    def test_announcements_newest_first(self, seeded):
        admin_token = seeded.login("admin")
        for text in ("first", "second"):
            seeded.clock.advance(minutes=1)
            seeded.client.post(
                "/mockboard/api/announcements",
                json={"body": text},
                headers=seeded.auth(admin_token),
            )
        token = seeded.login("noemi")
        body = seeded.client.get("/mockboard/api/dashboard", headers=seeded.auth(token)).json()
        assert [a["body"] for a in body["announcements"]] == ["second", "first"]

    def test_empty_course_still_serves_profile(self, api):
        course = make_course(api.store)
        make_examinee(api.store, course.course_id)
        token = api.login("noemi")
        body = api.client.get("/mockboard/api/dashboard", headers=api.auth(token)).json()
        assert body["exams"] == []
        assert body["profile"]["student_number"] == "2018-0001"


class TestAdminCrud:
    def test_create_exam_listed(self, seeded):
        token = seeded.login("admin")
        res = seeded.client.post(
            "/mockboard/api/exams",
            json={
                "name": "CJPE",
                "course_id": seeded.course.course_id,
                "exam_date": "2018-10-03",
                "duration_minutes": 60,
                "passing_rate": "75.00",
                "weight": 20,
                "instructions": "Choose the best answer.",
            },
            headers=seeded.auth(token),
        )
        assert res.status_code == 201, res.text
        assert res.json()["passing_rate"] == "75"
        listed = seeded.client.get("/mockboard/api/exams", headers=seeded.auth(token)).json()
        assert "CJPE" in [e["name"] for e in listed["exams"]]

    def test_one_choice_question_rejected(self, seeded):
        token = seeded.login("admin")
        res = seeded.client.post(
            f"/mockboard/api/exams/{seeded.exam.exam_id}/questions",
            json={"stem": "Lone choice?", "choices": ["only"], "correct_index": 0},
            headers=seeded.auth(token),
        )
        assert res.status_code == 400
        assert "choices" in res.json()["fields"]

    def test_unscoped_admin_lists_all_scoped_lists_own(self, seeded):
        bsed_exam = make_exam(
            seeded.store, seeded.other_course.course_id, name="Professional Education"
        )
        all_rows = seeded.client.get(
            "/mockboard/api/exams", headers=seeded.auth(seeded.login("admin"))
        ).json()["exams"]
        assert {e["exam_id"] for e in all_rows} == {seeded.exam.exam_id, bsed_exam.exam_id}
        scoped_rows = seeded.client.get(
            "/mockboard/api/exams", headers=seeded.auth(seeded.login("bsed-admin"))
        ).json()["exams"]
        assert [e["exam_id"] for e in scoped_rows] == [bsed_exam.exam_id]

    def test_scoped_admin_cannot_touch_foreign_exam(self, seeded):
        token = seeded.login("bsed-admin")
        res = seeded.client.get(
            f"/mockboard/api/exams/{seeded.exam.exam_id}", headers=seeded.auth(token)
        )
        assert res.status_code == 403
        res = seeded.client.post(
            f"/mockboard/api/exams/{seeded.exam.exam_id}/questions",
            json={"stem": "sneak?", "choices": ["a", "b"], "correct_index": 0},
            headers=seeded.auth(token),
        )
        assert res.status_code == 403

    def test_weight_defaults_to_100_for_sole_exam(self, seeded):
        token = seeded.login("admin")
        fresh = seeded.client.post(
            "/mockboard/api/courses",
            json={"name": "Bachelor of Science in Fisheries"},
            headers=seeded.auth(token),
        ).json()
        payload = {
            "name": "Fisheries Licensure Mock",
            "course_id": fresh["course_id"],
            "exam_date": "2018-12-01",
            "duration_minutes": 60,
            "passing_rate": 75,
        }
        first = seeded.client.post(
            "/mockboard/api/exams", json=payload, headers=seeded.auth(token)
        )
        assert first.status_code == 201
        assert first.json()["weight"] == "100"
        # A second weightless exam in the same course must be explicit.
        second = seeded.client.post(
            "/mockboard/api/exams",
            json={**payload, "name": "Second Subject"},
            headers=seeded.auth(token),
        )
        assert second.status_code == 400
        assert "weight" in second.json()["fields"]

    def test_weight_overflow_warning(self, seeded):
        token = seeded.login("admin")
        res = seeded.client.post(
            "/mockboard/api/exams",
            json={
                "name": "Overweight",
                "course_id": seeded.course.course_id,
                "exam_date": "2018-12-01",
                "duration_minutes": 30,
                "passing_rate": 75,
                "weight": 90,  # existing exam already carries 15
            },
            headers=seeded.auth(token),
        )
        assert res.status_code == 201
        assert "warning" in res.json()

    def test_delete_course_with_exams_refused(self, seeded):
        token = seeded.login("admin")
        res = seeded.client.delete(
            f"/mockboard/api/courses/{seeded.course.course_id}", headers=seeded.auth(token)
        )
        assert res.status_code == 409
        assert res.json()["code"] == "DELETE_RESTRICTED"

    def test_question_update_and_delete(self, seeded):
        token = seeded.login("admin")
        question = seeded.questions[0]
        res = seeded.client.put(
            f"/mockboard/api/exams/{seeded.exam.exam_id}/questions/{question.question_id}",
            json={
                "stem": "Updated stem?",
                "choices": ["w", "x", "y"],
                "correct_index": 2,
                "category": "recall",
            },
            headers=seeded.auth(token),
        )
        assert res.status_code == 200
        assert res.json()["stem"] == "Updated stem?"
        res = seeded.client.delete(
            f"/mockboard/api/exams/{seeded.exam.exam_id}/questions/{question.question_id}",
            headers=seeded.auth(token),
        )
        assert res.status_code == 200
        listed = seeded.client.get(
            f"/mockboard/api/exams/{seeded.exam.exam_id}/questions", headers=seeded.auth(token)
        ).json()["questions"]
        assert len(listed) == 9


class TestReportsEndpoints:
    def finalize_one(self, seeded):
        token = seeded.login("noemi")
        view = seeded.client.post(
            "/mockboard/api/attempts",
            json={"exam_id": seeded.exam.exam_id},
            headers=seeded.auth(token),
        ).json()
        by_id = {q.question_id: q for q in seeded.questions}
        for card in view["questions"][:9]:
            seeded.client.put(
                f"/mockboard/api/attempts/{view['attempt_id']}/answers/{card['question_id']}",
                json={"choice": by_id[card["question_id"]].correct_index},
                headers=seeded.auth(token),
            )
        seeded.client.post(
            f"/mockboard/api/attempts/{view['attempt_id']}/submit", headers=seeded.auth(token)
        )
        return token

    def test_grade_report_json_and_csv(self, seeded):
        self.finalize_one(seeded)
        admin = seeded.login("admin")
        body = seeded.client.get(
            f"/mockboard/api/reports/grades/{seeded.exam.exam_id}", headers=seeded.auth(admin)
        ).json()
        assert len(body["rows"]) == 1
        assert body["rows"][0]["weighted_score"] == "13.5"
        res = seeded.client.get(
            f"/mockboard/api/reports/grades/{seeded.exam.exam_id}.csv",
            headers=seeded.auth(admin),
        )
        assert res.status_code == 200
        assert res.headers["content-type"].startswith("text/csv")
        first_line = res.text.split("\r\n")[0]
        assert first_line == "examinee,student_number,attempt,raw_score,weighted_score,outcome,started_at,submitted_at"
        assert '"Fallan, Noemi M"' in res.text

    def test_item_analysis_endpoint(self, seeded):
        self.finalize_one(seeded)
        admin = seeded.login("admin")
        body = seeded.client.get(
            f"/mockboard/api/reports/item-analysis/{seeded.exam.exam_id}",
            headers=seeded.auth(admin),
        ).json()
        assert body["n_examinees"] == 1
        assert len(body["rows"]) == 10
        # Single examinee: discrimination omitted.
        assert all(r["discrimination"] is None for r in body["rows"])

    def test_certificate_endpoints(self, seeded):
        token = self.finalize_one(seeded)
        body = seeded.client.get(
            "/mockboard/api/certificate", headers=seeded.auth(token)
        ).json()
        assert body["overall_rating"] == "13.5"
        assert body["rows"][0]["weighted_display"] == "13.5 of 15%"
        html = seeded.client.get(
            "/mockboard/api/certificate.html", headers=seeded.auth(token)
        )
        assert html.status_code == 200
        assert "EXAMINATION PROGRESS" in html.text
        assert "13.5 of 15%" in html.text

    def test_reports_scope_enforced(self, seeded):
        self.finalize_one(seeded)
        token = seeded.login("bsed-admin")
        res = seeded.client.get(
            f"/mockboard/api/reports/grades/{seeded.exam.exam_id}", headers=seeded.auth(token)
        )
        assert res.status_code == 403


class TestAuthorizationMatrix:
    """Endpoint x role table, checked exhaustively."""

    CASES = [
        # (method, path template, payload, {role: expected status})
        ("GET", "/mockboard/api/health", None,
         {"anon": 200, "examinee": 200, "admin": 200, "scoped": 200}),
        ("GET", "/mockboard/api/courses", None,
         {"anon": 200, "examinee": 200, "admin": 200, "scoped": 200}),
        ("GET", "/mockboard/api/dashboard", None,
         {"anon": 401, "examinee": 200, "admin": 403, "scoped": 403}),
        ("POST", "/mockboard/api/attempts", {"exam_id": "EXAM"},
         {"anon": 401, "examinee": 200, "admin": 403, "scoped": 403}),
        ("GET", "/mockboard/api/certificate", None,
         {"anon": 401, "examinee": 200, "admin": 403, "scoped": 403}),
        ("GET", "/mockboard/api/exams", None,
         {"anon": 401, "examinee": 403, "admin": 200, "scoped": 200}),
        ("POST", "/mockboard/api/exams",
         {"name": "X", "course_id": "COURSE", "exam_date": "2019-01-01",
          "duration_minutes": 10, "passing_rate": 75, "weight": 10},
         {"anon": 401, "examinee": 403, "admin": 201, "scoped": 403}),
        ("GET", "/mockboard/api/exams/EXAM/questions", None,
         {"anon": 401, "examinee": 403, "admin": 200, "scoped": 403}),
        ("GET", "/mockboard/api/accounts", None,
         {"anon": 401, "examinee": 403, "admin": 200, "scoped": 200}),
        ("POST", "/mockboard/api/announcements", {"body": "hi"},
         {"anon": 401, "examinee": 403, "admin": 201, "scoped": 201}),
        ("GET", "/mockboard/api/reports/grades/EXAM", None,
         {"anon": 401, "examinee": 403, "admin": 200, "scoped": 403}),
        ("GET", "/mockboard/api/reports/item-analysis/EXAM", None,
         {"anon": 401, "examinee": 403, "admin": 200, "scoped": 403}),
        ("POST", "/mockboard/api/courses", {"name": "New Course"},
         {"anon": 401, "examinee": 403, "admin": 201, "scoped": 403}),
    ]

    def test_matrix(self, seeded):
        tokens = {
            "anon": None,
            "examinee": seeded.login("noemi"),
            "admin": seeded.login("admin"),
            "scoped": seeded.login("bsed-admin"),
        }
        failures = []
        for method, path, payload, expectations in self.CASES:
            path = path.replace("EXAM", seeded.exam.exam_id)
            body = None
            if payload is not None:
                body = json.loads(
                    json.dumps(payload)
                    .replace("EXAM", seeded.exam.exam_id)
                    .replace("COURSE", seeded.course.course_id)
                )
            for role, expected in expectations.items():
                headers = seeded.auth(tokens[role]) if tokens[role] else {}
                res = seeded.client.request(method, path, json=body, headers=headers)
                if res.status_code != expected:
                    failures.append(
                        f"{method} {path} as {role}: got {res.status_code}, want {expected}"
                    )
        assert not failures, "\n".join(failures)
