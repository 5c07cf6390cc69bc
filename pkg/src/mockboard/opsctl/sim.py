"""Concurrent virtual-examinee load harness.

Each virtual examinee registers through the real API, is verified via
the admin API (no backdoor), takes the target exam with a scripted
answer sheet, and submits. The script knows the answer key (fetched once
with admin credentials), so every server-reported raw score can be
checked against the script's own expected count — an end-to-end
integrity oracle covering registration, verification, answer persistence
and grading.
"""
from __future__ import annotations

import random
import secrets
import statistics
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import httpx

API = "/mockboard/api"


@dataclass
class VirtualRun:
    username: str
    completed: bool = False
    error: str | None = None
    expected_raw: int = 0
    reported_raw: int | None = None
    answers_acknowledged: int = 0
    submit_started: float = 0.0
    result_received: float = 0.0

    @property
    def submit_latency(self) -> float:
        return self.result_received - self.submit_started

    @property
    def integrity_ok(self) -> bool:
        return self.completed and self.reported_raw == self.expected_raw


@dataclass
class SimReport:
    requested: int
    runs: list[VirtualRun] = field(default_factory=list)
    operational_errors: list[str] = field(default_factory=list)
    wall_seconds: float = 0.0

    @property
    def completed(self) -> int:
        return sum(1 for r in self.runs if r.completed)

    @property
    def mismatches(self) -> list[VirtualRun]:
        return [r for r in self.runs if r.completed and not r.integrity_ok]

    @property
    def submit_wall_seconds(self) -> float:
        done = [r for r in self.runs if r.completed]
        if not done:
            return 0.0
        return max(r.result_received for r in done) - min(r.submit_started for r in done)

    def latencies(self) -> list[float]:
        return [r.submit_latency for r in self.runs if r.completed]

    def exit_code(self) -> int:
        if self.mismatches:
            return 2
        if self.operational_errors or self.completed < self.requested:
            return 1
        return 0

    def summary(self) -> dict:
        latencies = self.latencies()
        return {
            "requested": self.requested,
            "completed": self.completed,
            "integrity_mismatches": len(self.mismatches),
            "operational_errors": len(self.operational_errors),
            "submit_latency_max_s": round(max(latencies), 3) if latencies else None,
            "submit_latency_mean_s": round(statistics.mean(latencies), 3) if latencies else None,
            "submit_wall_s": round(self.submit_wall_seconds, 3),
            "wall_s": round(self.wall_seconds, 3),
        }


def _check(response: httpx.Response, context: str) -> dict:
    if response.status_code >= 400:
        raise RuntimeError(f"{context}: HTTP {response.status_code} {response.text[:200]}")
    return response.json()


def simulate(
    server_url: str,
    examinees: int,
    exam_id: str,
    admin_username: str = "admin",
    admin_password: str = "admin",
    seed: int | None = None,
) -> SimReport:
    base = server_url.rstrip("/")
    report = SimReport(requested=examinees)
    started = time.monotonic()
    run_tag = secrets.token_hex(3)
    master = random.Random(seed if seed is not None else secrets.randbits(32))
    worker_seeds = [master.getrandbits(32) for _ in range(examinees)]

    try:
        with httpx.Client(base_url=base, timeout=30.0) as admin:
            login = _check(
                admin.post(
                    API + "/login",
                    json={"username": admin_username, "password": admin_password},
                ),
                "admin login",
            )
            admin_auth = {"Authorization": f"Bearer {login['token']}"}
            bank = _check(
                admin.get(API + f"/exams/{exam_id}/questions", headers=admin_auth),
                "fetch answer key",
            )["questions"]
            course_id = _check(
                admin.get(API + f"/exams/{exam_id}", headers=admin_auth), "fetch exam"
            )["course_id"]
    except (httpx.HTTPError, RuntimeError) as exc:
        report.operational_errors.append(str(exc))
        report.wall_seconds = time.monotonic() - started
        return report
    if not bank:
        report.operational_errors.append(f"exam {exam_id} has no questions")
        report.wall_seconds = time.monotonic() - started
        return report
    key = {q["question_id"]: (q["correct_index"], len(q["choices"])) for q in bank}

    def run_one(index: int) -> VirtualRun:
        rng = random.Random(worker_seeds[index])
        username = f"sim-{run_tag}-{index:03d}"
        run = VirtualRun(username=username)
        try:
            with httpx.Client(base_url=base, timeout=30.0) as client:
                account_id = None
                for _ in range(8):  # student numbers are only 8 digits; dodge collisions
                    res = client.post(
                        API + "/register",
                        json={
                            "username": username,
                            "password": f"pw-{run_tag}-{index}",
                            "student_number": f"{rng.randint(1900, 2099)}-{rng.randint(0, 9999):04d}",
                            "last_name": "Virtual",
                            "first_name": f"Examinee {index:03d}",
                            "middle_name": "S",
                            "address": "Load Harness Lane",
                            "contact_number": "09170000000",
                            "birthdate": "1998-01-01",
                            "course_id": course_id,
                            "terms_accepted": True,
                        },
                    )
                    if res.status_code == 201:
                        account_id = res.json()["account_id"]
                        break
                    if res.status_code == 409 and "student_number" in res.json().get("fields", {}):
                        continue
                    raise RuntimeError(f"register: HTTP {res.status_code} {res.text[:200]}")
                if account_id is None:
                    raise RuntimeError("register: could not find a free student number")
                _check(
                    client.post(
                        API + f"/accounts/{account_id}/verify", headers=admin_auth
                    ),
                    "verify",
                )
                token = _check(
                    client.post(
                        API + "/login",
                        json={"username": username, "password": f"pw-{run_tag}-{index}"},
                    ),
                    "login",
                )["token"]
                auth = {"Authorization": f"Bearer {token}"}
                view = _check(
                    client.post(API + "/attempts", json={"exam_id": exam_id}, headers=auth),
                    "start attempt",
                )
                attempt_id = view["attempt_id"]
                for card in view["questions"]:
                    qid = card["question_id"]
                    correct_index, n_choices = key[qid]
                    if rng.random() < 0.7:
                        choice = correct_index
                        run.expected_raw += 1
                    else:
                        choice = (correct_index + 1 + rng.randrange(n_choices - 1)) % n_choices
                    _check(
                        client.put(
                            API + f"/attempts/{attempt_id}/answers/{qid}",
                            json={"choice": choice},
                            headers=auth,
                        ),
                        f"answer {qid}",
                    )
                    run.answers_acknowledged += 1
                run.submit_started = time.monotonic()
                result = _check(
                    client.post(API + f"/attempts/{attempt_id}/submit", headers=auth),
                    "submit",
                )
                run.result_received = time.monotonic()
                run.reported_raw = result["raw_score"]
                replay = _check(
                    client.get(API + f"/attempts/{attempt_id}/result", headers=auth),
                    "re-fetch result",
                )
                if replay != result:
                    raise RuntimeError("result endpoint disagrees with submit response")
                run.completed = True
        except (httpx.HTTPError, RuntimeError) as exc:
            run.error = str(exc)
        return run

    with ThreadPoolExecutor(max_workers=examinees) as pool:
        report.runs = list(pool.map(run_one, range(examinees)))
    for run in report.runs:
        if run.error:
            report.operational_errors.append(f"{run.username}: {run.error}")
    report.wall_seconds = time.monotonic() - started
    return report
