"""Operator tooling: CLI, question-bank interchange, demo seed, load harness."""
from .bank import BANK_COLUMNS, export_questions, import_questions, parse_bank_row
from .seed import seed_demo
from .sim import SimReport, VirtualRun, simulate

__all__ = [
    "BANK_COLUMNS",
    "SimReport",
    "VirtualRun",
    "export_questions",
    "import_questions",
    "parse_bank_row",
    "seed_demo",
    "simulate",
]
