"""Operator CLI: offline subcommands, config handling, live serve smoke."""
from __future__ import annotations

import json
import os
import signal
import socket
import subprocess
import sys
import time
from decimal import Decimal

import httpx
import pytest

from mockboard.opsctl.cli import main
from mockboard.server import load_config
from mockboard.store import Store


def free_port() -> int:
    probe = socket.socket()
    probe.bind(("127.0.0.1", 0))
    port = probe.getsockname()[1]
    probe.close()
    return port


def wait_healthy(base: str, timeout=15.0) -> None:
    deadline = time.monotonic() + timeout
    while time.monotonic() < deadline:
        try:
            if httpx.get(base + "/mockboard/api/health", timeout=2).status_code == 200:
                return
        except httpx.HTTPError:
            time.sleep(0.05)
    raise TimeoutError(f"server at {base} never became healthy")


def spawn_server(data_dir, port, extra_env=None, log_path=None) -> subprocess.Popen:
    env = dict(os.environ)
    env.update(extra_env or {})
    # Never PIPE without a reader: the access log would fill the pipe buffer
    # and block the server mid-test.
    log_fh = open(log_path, "ab") if log_path else subprocess.DEVNULL
    return subprocess.Popen(
        [
            sys.executable,
            "-m",
            "mockboard.opsctl.cli",
            "serve",
            "--data-dir",
            str(data_dir),
            "--listen",
            f"127.0.0.1:{port}",
        ],
        env=env,
        stdout=log_fh,
        stderr=subprocess.STDOUT,
    )


class TestConfig:
    def test_defaults(self):
        config, warnings = load_config(None)
        assert config.listen == "0.0.0.0:8080"
        assert config.data_dir == "mockboard-data"
        assert config.passing_threshold == Decimal("75")
        assert config.grace_seconds == 30
        assert warnings == []

    def test_file_and_env_precedence(self, tmp_path, monkeypatch):
        path = tmp_path / "conf.json"
        path.write_text(json.dumps({"listen": "10.0.0.1:9000", "grace_seconds": 10}))
        monkeypatch.setenv("MOCKBOARD_LISTEN", "127.0.0.1:9111")
        monkeypatch.setenv("MOCKBOARD_PASSING_THRESHOLD", "80")
        config, _ = load_config(path)
        assert config.listen == "127.0.0.1:9111"  # env beats file
        assert config.grace_seconds == 10  # file beats default
        assert config.passing_threshold == Decimal("80")

    def test_missing_file_warns_and_defaults(self, tmp_path):
        config, warnings = load_config(tmp_path / "nope.json")
        assert config.listen == "0.0.0.0:8080"
        assert any("not found" in w for w in warnings)

    def test_unknown_keys_warn(self, tmp_path):
        path = tmp_path / "conf.json"
        path.write_text(json.dumps({"portt": 1}))
        _, warnings = load_config(path)
        assert any("unknown config keys" in w for w in warnings)


class TestOfflineCommands:
    def test_init_admin_and_duplicate(self, tmp_path, capsys):
        data = tmp_path / "data"
        assert main(["init-admin", "root", "pw", "--data-dir", str(data)]) == 0
        assert "admin 'root' ready" in capsys.readouterr().out
        assert main(["init-admin", "root", "pw", "--data-dir", str(data)]) == 1

    def test_init_admin_scope_by_name(self, tmp_path):
        data = tmp_path / "data"
        assert main(["seed-demo", "--data-dir", str(data)]) == 0
        assert (
            main(
                [
                    "init-admin",
                    "crim-admin",
                    "pw",
                    "--data-dir",
                    str(data),
                    "--course-scope",
                    "Bachelor of Science in Criminology",
                ]
            )
            == 0
        )
        with Store(data) as store:
            admin = store.find_account_by_username("crim-admin")
            assert admin.scope_course_id == "course-bscrim"

    def test_init_admin_unknown_scope(self, tmp_path):
        data = tmp_path / "data"
        assert main(["init-admin", "x", "pw", "--data-dir", str(data), "--course-scope", "Nope"]) == 1

    def test_seed_demo_then_nonempty_guard(self, tmp_path, capsys):
        data = tmp_path / "data"
        assert main(["seed-demo", "--data-dir", str(data)]) == 0
        out = capsys.readouterr().out
        assert '"exams": 5' in out
        assert main(["seed-demo", "--data-dir", str(data)]) == 1

    def test_import_export_round_trip_via_cli(self, tmp_path, capsys):
        data = tmp_path / "data"
        main(["seed-demo", "--data-dir", str(data)])
        out_csv = tmp_path / "bank.csv"
        assert (
            main(
                [
                    "export-questions",
                    "--data-dir",
                    str(data),
                    "--exam",
                    "exam-bscrim-1",
                    "-o",
                    str(out_csv),
                ]
            )
            == 0
        )
        capsys.readouterr()
        # Import into the never-attempted fifth exam... it already has 10
        # questions, so target a fresh exam created directly.
        from datetime import date, datetime, timezone

        from mockboard.store import Exam

        with Store(data) as store:
            store.put_exam(
                Exam(
                    exam_id="exam-extra",
                    course_id="course-bscrim",
                    name="Extra",
                    instructions="",
                    exam_date=date(2018, 11, 21),
                    duration_minutes=60,
                    passing_rate=Decimal("75"),
                    weight=Decimal("20"),
                ),
                datetime.now(timezone.utc),
            )
        assert (
            main(
                [
                    "import-questions",
                    str(out_csv),
                    "--data-dir",
                    str(data),
                    "--exam",
                    "exam-extra",
                ]
            )
            == 0
        )
        assert "imported 10 questions" in capsys.readouterr().out

    def test_import_schema_error_exit_code(self, tmp_path):
        data = tmp_path / "data"
        main(["seed-demo", "--data-dir", str(data)])
        bad = tmp_path / "bad.csv"
        bad.write_text(
            "exam_name,stem,choice_a,choice_b,choice_c,choice_d,choice_e,correct,category\r\n"
            'X,Valid?,a,b,,,,A,\r\n'
            'X,Broken?,a,b,,,,F,\r\n'
        )
        assert main(["import-questions", str(bad), "--data-dir", str(data), "--exam", "exam-bscrim-5"]) == 1


@pytest.mark.slow
class TestServeSmoke:
    def test_serve_health_and_locked_dir(self, tmp_path):
        data = tmp_path / "data"
        port = free_port()
        proc = spawn_server(data, port)
        try:
            wait_healthy(f"http://127.0.0.1:{port}")
            res = httpx.get(f"http://127.0.0.1:{port}/mockboard/api/health")
            assert res.json() == {"status": "ok"}
            # Second server on the same data dir but another port: lock refused.
            second = spawn_server(data, free_port())
            assert second.wait(timeout=20) == 1
        finally:
            proc.send_signal(signal.SIGINT)
            proc.wait(timeout=10)

    def test_port_in_use_exits_1(self, tmp_path):
        holder = socket.socket()
        holder.bind(("127.0.0.1", 0))
        port = holder.getsockname()[1]
        try:
            proc = spawn_server(tmp_path / "data", port)
            assert proc.wait(timeout=20) == 1
        finally:
            holder.close()

    def test_simulate_small_cohort(self, tmp_path):
        data = tmp_path / "data"
        assert main(["seed-demo", "--data-dir", str(data)]) == 0
        port = free_port()
        proc = spawn_server(data, port)
        try:
            base = f"http://127.0.0.1:{port}"
            wait_healthy(base)
            code = main(
                [
                    "simulate",
                    "--server",
                    base,
                    "--examinees",
                    "3",
                    "--exam",
                    "exam-bscrim-5",
                    "--seed",
                    "7",
                ]
            )
            assert code == 0
        finally:
            proc.send_signal(signal.SIGINT)
            proc.wait(timeout=10)

    def test_simulate_server_down(self, capsys):
        code = main(
            [
                "simulate",
                "--server",
                "http://127.0.0.1:1",
                "--examinees",
                "2",
                "--exam",
                "whatever",
            ]
        )
        assert code == 1
        assert '"completed": 0' in capsys.readouterr().out
