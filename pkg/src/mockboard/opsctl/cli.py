"""Operator CLI: serve, init-admin, import/export question banks,
seed-demo, simulate.

Exit codes: 0 success, 1 operational error, 2 integrity violation
(simulate only).
"""
from __future__ import annotations

import argparse
import json
import logging
import socket
import sys
from dataclasses import replace
from datetime import datetime, timezone
from pathlib import Path

from ..errors import MockboardError, SchemaError
from ..server import ServerConfig, create_app, load_config, parse_listen
from ..store import Account, AccountStatus, Role, Store, digest_password
from .bank import export_questions, import_questions
from .seed import seed_demo
from .sim import simulate

log = logging.getLogger("mockboard.opsctl")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opsctl", description="Operate a mockboard examination server."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON config file")
        p.add_argument("--data-dir", help="override the data directory")

    p = sub.add_parser("serve", help="run the examination server until terminated")
    common(p)
    p.add_argument("--listen", help="host:port to bind (default 0.0.0.0:8080)")
    p.add_argument("--ui-dir", help="directory with the built web UI to serve at /mockboard")

    p = sub.add_parser("init-admin", help="bootstrap a verified admin account")
    common(p)
    p.add_argument("username")
    p.add_argument("password")
    p.add_argument("--course-scope", help="restrict the admin to one course (name or id)")

    p = sub.add_parser("import-questions", help="load a question-bank CSV into an exam")
    common(p)
    p.add_argument("csv_path")
    p.add_argument("--exam", required=True, help="target exam id")

    p = sub.add_parser("export-questions", help="write an exam's question bank as CSV")
    common(p)
    p.add_argument("--exam", required=True, help="source exam id")
    p.add_argument("-o", "--output", help="output file (default stdout)")

    p = sub.add_parser("seed-demo", help="populate an empty data directory with demo data")
    common(p)

    p = sub.add_parser("simulate", help="drive N concurrent virtual examinees")
    p.add_argument("--server", required=True, help="base URL, e.g. http://192.168.100.10:8080")
    p.add_argument("--examinees", type=int, default=40)
    p.add_argument("--exam", required=True, help="exam id to take")
    p.add_argument("--admin-user", default="admin")
    p.add_argument("--admin-password", default="admin")
    p.add_argument("--seed", type=int, help="script RNG seed for reproducible runs")
    return parser


def _resolve_config(args) -> ServerConfig:
    config, warnings = load_config(args.config)
    for warning in warnings:
        log.warning(warning)
    if getattr(args, "data_dir", None):
        config = replace(config, data_dir=args.data_dir)
    if getattr(args, "listen", None):
        host, port = parse_listen(args.listen)
        config = replace(config, host=host, port=port)
    if getattr(args, "ui_dir", None):
        config = replace(config, ui_dir=args.ui_dir)
    return config


def _now() -> datetime:
    return datetime.now(timezone.utc)


def cmd_serve(args) -> int:
    config = _resolve_config(args)
    probe = socket.socket()
    try:
        probe.bind((config.host, config.port))
    except OSError as exc:
        log.error("cannot bind %s: %s", config.listen, exc)
        return 1
    finally:
        probe.close()
    try:
        store = Store(Path(config.data_dir), grace_seconds=config.grace_seconds)
    except MockboardError as exc:
        log.error("%s", exc.message)
        return 1
    import uvicorn

    app = create_app(store, config)
    log.info("serving on %s, data in %s", config.listen, config.data_dir)
    try:
        uvicorn.run(
            app, host=config.host, port=config.port, log_level="warning", access_log=False
        )
    except (OSError, SystemExit) as exc:
        code = exc.code if isinstance(exc, SystemExit) and exc.code is not None else 1
        log.error("server stopped: %s", exc)
        return int(code) if code else 0
    finally:
        store.close()
    return 0


def cmd_init_admin(args) -> int:
    config = _resolve_config(args)
    with Store(Path(config.data_dir)) as store:
        scope_id = None
        if args.course_scope:
            course = store.courses.get(args.course_scope) or store.find_course_by_name(
                args.course_scope
            )
            if course is None:
                log.error("no course named %r", args.course_scope)
                return 1
            scope_id = course.course_id
        account = store.put_account(
            Account(
                account_id="",
                username=args.username,
                password_digest=digest_password(args.password),
                role=Role.ADMIN,
                status=AccountStatus.VERIFIED,
                created_at=None,
                scope_course_id=scope_id,
            ),
            _now(),
        )
    print(f"admin {account.username!r} ready ({account.account_id})")
    return 0


def cmd_import_questions(args) -> int:
    config = _resolve_config(args)
    with Store(Path(config.data_dir)) as store:
        count = import_questions(store, args.exam, args.csv_path, _now())
    print(f"imported {count} questions into {args.exam}")
    return 0


def cmd_export_questions(args) -> int:
    config = _resolve_config(args)
    with Store(Path(config.data_dir)) as store:
        text = export_questions(store, args.exam)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_seed_demo(args) -> int:
    config = _resolve_config(args)
    summary = seed_demo(Path(config.data_dir))
    print(f"seeded demo data in {config.data_dir}: {json.dumps(summary)}")
    print("demo credentials: admin/admin (admin), noemi/noemi (examinee)")
    return 0


def cmd_simulate(args) -> int:
    report = simulate(
        args.server,
        args.examinees,
        args.exam,
        admin_username=args.admin_user,
        admin_password=args.admin_password,
        seed=args.seed,
    )
    for line in report.operational_errors[:10]:
        print(f"error: {line}", file=sys.stderr)
    if len(report.operational_errors) > 10:
        print(f"... and {len(report.operational_errors) - 10} more", file=sys.stderr)
    for run in report.mismatches:
        print(
            f"INTEGRITY MISMATCH {run.username}: expected {run.expected_raw}, "
            f"server reported {run.reported_raw}",
            file=sys.stderr,
        )
    print("SIMULATE_RESULT " + json.dumps(report.summary()))
    return report.exit_code()


_COMMANDS = {
    "serve": cmd_serve,
    "init-admin": cmd_init_admin,
    "import-questions": cmd_import_questions,
    "export-questions": cmd_export_questions,
    "seed-demo": cmd_seed_demo,
    "simulate": cmd_simulate,
}


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(
        level=logging.INFO, format="%(asctime)s %(levelname)s %(name)s %(message)s"
    )
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SchemaError as exc:
        log.error("line %s: %s", exc.line, exc.message)
        return 1
    except MockboardError as exc:
        log.error("%s", exc.message)
        return 1


if __name__ == "__main__":
    sys.exit(main())
