"""Student number format."""
from __future__ import annotations

import pytest

from mockboard.core import validate_student_number


@pytest.mark.parametrize("s", ["2018-0001", "0000-0000", "9999-9999", "2024-1234"])
def test_accepted(s):
    assert validate_student_number(s)


@pytest.mark.parametrize(
    "s",
    [
        "18-001",
        "2018-00010",
        "ABCD-0001",
        "2018_0001",
        "20180001",
        "2018-001",
        "02018-0001",
        " 2018-0001",
        "2018-0001 ",
        "2018-0001\n",
        "",
    ],
)
def test_rejected(s):
    assert not validate_student_number(s)
