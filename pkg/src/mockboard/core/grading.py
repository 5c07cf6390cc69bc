"""Grading and weighting arithmetic.

All comparisons are exact: raw scores are integers, ratios are
``fractions.Fraction``, and percentages are normalized to ``Decimal``
before use. Floating point never touches a pass/fail boundary. Weighted
scores are rendered to one decimal place, round half up, which is also
the value they carry (so sums of weighted scores equal sums of the
displayed row values).
"""
from __future__ import annotations

from decimal import Decimal, InvalidOperation
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..errors import DegenerateExam, UnknownQuestion, ValidationFailed, WeightOverflow

DEFAULT_PASSING_RATE = Decimal("75")
DEFAULT_OVERALL_THRESHOLD = Decimal("75")


class Outcome(str, Enum):
    PASSED = "Passed"
    FAILED = "Failed"
    IN_PROGRESS = "InProgress"


def as_percent(value: int | float | str | Decimal, field: str = "percent") -> Decimal:
    """Normalize a percentage to an exact Decimal in (0, 100]."""
    try:
        dec = value if isinstance(value, Decimal) else Decimal(str(value))
    except InvalidOperation:
        raise ValidationFailed(f"{field} is not a number", fields={field: "not a number"})
    if not Decimal("0") < dec <= Decimal("100"):
        raise ValidationFailed(
            f"{field} must be in (0, 100], got {dec}", fields={field: "out of range"}
        )
    return dec


def grade(answers: Mapping[str, int], key: Mapping[str, int]) -> int:
    """Count answers matching the key; unanswered questions score zero."""
    for qid in answers:
        if qid not in key:
            raise UnknownQuestion(f"answer references unknown question {qid!r}")
    return sum(1 for qid, chosen in answers.items() if chosen == key[qid])


def _half_up_tenths(value: Fraction) -> Decimal:
    """Exact round-half-up of a non-negative fraction to one decimal place."""
    scaled = value * 10
    whole, rem = divmod(scaled.numerator, scaled.denominator)
    if 2 * rem >= scaled.denominator:
        whole += 1
    return Decimal(whole).scaleb(-1).quantize(Decimal("0.1"))


def weighted_score(raw: int, total: int, weight: int | float | str | Decimal) -> Decimal:
    """Weighted points (raw/total)*weight, one decimal place, round half up."""
    if total == 0:
        raise DegenerateExam("exam has no questions")
    if total < 0 or not 0 <= raw <= total:
        raise ValidationFailed(f"raw {raw} outside 0..{total}")
    w = as_percent(weight, "weight")
    return _half_up_tenths(Fraction(raw, total) * Fraction(w))


def subject_outcome(raw: int, total: int, passing_rate: int | float | str | Decimal) -> Outcome:
    """Pass iff 100*raw/total >= passing_rate, compared as exact rationals."""
    if total < 1:
        raise DegenerateExam("exam has no questions")
    rate = as_percent(passing_rate, "passing_rate")
    return Outcome.PASSED if Fraction(100 * raw, total) >= Fraction(rate) else Outcome.FAILED


def overall_rating(
    parts: Iterable[Sequence],
    threshold: int | float | str | Decimal = DEFAULT_OVERALL_THRESHOLD,
) -> tuple[Decimal, Outcome]:
    """Composite rating over (raw, total, weight[, passing_rate]) parts.

    Rating is the sum of the one-decimal weighted scores. Overall outcome
    is Passed only when the rating meets ``threshold`` and every part
    individually passed at its own rate (default 75).
    """
    thr = as_percent(threshold, "threshold")
    rating = Decimal("0.0")
    weight_sum = Fraction(0)
    all_passed = True
    for part in parts:
        if len(part) == 3:
            raw, total, weight = part
            rate: int | float | str | Decimal = DEFAULT_PASSING_RATE
        else:
            raw, total, weight, rate = part
        rating += weighted_score(raw, total, weight)
        weight_sum += Fraction(as_percent(weight, "weight"))
        if subject_outcome(raw, total, rate) is not Outcome.PASSED:
            all_passed = False
    if weight_sum > 100:
        raise WeightOverflow(f"subject weights sum to {float(weight_sum)} > 100")
    passed = all_passed and Fraction(rating) >= Fraction(thr)
    return rating, Outcome.PASSED if passed else Outcome.FAILED


def format_points(points: Decimal) -> str:
    """Render a weighted score with exactly one decimal place ("13.5", "0.0")."""
    return str(points.quantize(Decimal("0.1")))


def format_percent(value: Decimal) -> str:
    """Render a percentage without trailing zeros ("15", "12.5")."""
    text = f"{value:f}"
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def weighted_display(raw: int, total: int, weight: int | float | str | Decimal) -> str:
    """The result-page cell: e.g. grade 9/10 at weight 15 -> "13.5 of 15%"."""
    w = as_percent(weight, "weight")
    return f"{format_points(weighted_score(raw, total, w))} of {format_percent(w)}%"
