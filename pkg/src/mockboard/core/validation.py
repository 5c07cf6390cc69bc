"""Field format checks shared by registration and the store."""
from __future__ import annotations

import re

_STUDENT_NUMBER = re.compile(r"\d{4}-\d{4}")


def validate_student_number(s: str) -> bool:
    """True iff the text is exactly four digits, a hyphen, four digits."""
    return bool(_STUDENT_NUMBER.fullmatch(s))
