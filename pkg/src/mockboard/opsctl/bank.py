"""Question-bank CSV interchange.

Columns: exam_name, stem, choice_a..choice_e (c-e optional), correct
(letter A-E), category (optional). Choices must fill contiguously from
choice_a; the correct letter must reference a populated choice. Import
is all-or-nothing: the first bad row aborts with its 1-based line
number. The exam_name column is informational on import (the target exam
comes from the command); export fills it so banks stay self-describing.
"""
from __future__ import annotations

import csv
import io
from datetime import datetime
from pathlib import Path

from ..errors import SchemaError
from ..store import Question, Store

BANK_COLUMNS = [
    "exam_name",
    "stem",
    "choice_a",
    "choice_b",
    "choice_c",
    "choice_d",
    "choice_e",
    "correct",
    "category",
]
_LETTERS = "ABCDE"


def parse_bank_row(row: dict, line: int) -> tuple[str, list[str], int, str | None]:
    """Validate one CSV row; returns (stem, choices, correct_index, category)."""
    stem = (row.get("stem") or "").strip()
    if not stem:
        raise SchemaError("stem is blank", line)
    raw_choices = [(row.get(f"choice_{c}") or "").strip() for c in "abcde"]
    choices = []
    for i, text in enumerate(raw_choices):
        if text:
            if i != len(choices):
                raise SchemaError(
                    f"choice_{'abcde'[i]} populated after a gap; choices must be contiguous",
                    line,
                )
            choices.append(text)
    if not 2 <= len(choices) <= 5:
        raise SchemaError(f"{len(choices)} choices populated; need 2 to 5", line)
    letter = (row.get("correct") or "").strip().upper()
    if len(letter) != 1 or letter not in _LETTERS:
        raise SchemaError(f"correct letter {letter!r} is not one of A-E", line)
    correct_index = _LETTERS.index(letter)
    if correct_index >= len(choices):
        raise SchemaError(f"correct letter {letter} references an empty choice", line)
    category = (row.get("category") or "").strip() or None
    return stem, choices, correct_index, category


def import_questions(store: Store, exam_id: str, csv_path: str | Path, now: datetime) -> int:
    """Append a bank file's rows to an exam; any bad row aborts the import."""
    exam = store.get_exam(exam_id)
    with open(csv_path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise SchemaError("file is empty", 1)
        missing = set(BANK_COLUMNS) - {"category", "exam_name"} - set(reader.fieldnames)
        if missing:
            raise SchemaError(f"missing columns: {sorted(missing)}", 1)
        parsed = []
        for line, row in enumerate(reader, start=2):
            parsed.append(parse_bank_row(row, line))
    for stem, choices, correct_index, category in parsed:
        store.put_question(
            Question(
                question_id="",
                exam_id=exam.exam_id,
                stem=stem,
                choices=choices,
                correct_index=correct_index,
                category=category,
            ),
            now,
        )
    return len(parsed)


def export_questions(store: Store, exam_id: str) -> str:
    """Bank CSV for one exam; export then import reproduces the bank."""
    exam = store.get_exam(exam_id)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(BANK_COLUMNS)
    for question in store.list_questions(exam_id):
        padded = list(question.choices) + [""] * (5 - len(question.choices))
        writer.writerow(
            [exam.name, question.stem, *padded, _LETTERS[question.correct_index],
             question.category or ""]
        )
    return buf.getvalue()
