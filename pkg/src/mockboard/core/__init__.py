"""Pure assessment logic: grading, weighting, shuffling, timing, item analysis.

Everything here is a pure function of its inputs and safe to call from
any number of threads.
"""
from .analysis import (
    ItemStats,
    choice_distribution,
    difficulty_index,
    discrimination_index,
    extreme_group_size,
)
from .grading import (
    DEFAULT_OVERALL_THRESHOLD,
    DEFAULT_PASSING_RATE,
    Outcome,
    as_percent,
    format_percent,
    format_points,
    grade,
    overall_rating,
    subject_outcome,
    weighted_display,
    weighted_score,
)
from .shuffle import PresentationOrder, SplitMix64, fisher_yates, presentation_order
from .timing import deadline_for, remaining_seconds
from .validation import validate_student_number

__all__ = [
    "DEFAULT_OVERALL_THRESHOLD",
    "DEFAULT_PASSING_RATE",
    "ItemStats",
    "Outcome",
    "PresentationOrder",
    "SplitMix64",
    "as_percent",
    "choice_distribution",
    "deadline_for",
    "difficulty_index",
    "discrimination_index",
    "extreme_group_size",
    "fisher_yates",
    "format_percent",
    "format_points",
    "grade",
    "overall_rating",
    "presentation_order",
    "remaining_seconds",
    "subject_outcome",
    "validate_student_number",
    "weighted_display",
    "weighted_score",
]
