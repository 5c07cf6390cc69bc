"""Classical test theory item statistics.

Difficulty is the proportion of correct responses (unanswered counts as
incorrect). Discrimination is the upper-vs-lower extreme-groups index:
examinees ranked by total raw score descending, group size
k = max(1, round-half-up(0.27*n)), D = p_upper - p_lower.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import NoData


@dataclass(frozen=True)
class ItemStats:
    question_id: str
    n_responses: int
    difficulty: float | None
    discrimination: float | None
    choice_distribution: tuple[int, ...]


def extreme_group_size(n: int) -> int:
    """k = max(1, round(0.27*n)) with exact integer half-up rounding."""
    return max(1, (27 * n + 50) // 100)


def difficulty_index(responses: Sequence[tuple[int | None, int]]) -> float:
    """Proportion of (chosen, correct) pairs that match; None = unanswered."""
    if not responses:
        raise NoData("no responses")
    correct = sum(1 for chosen, answer in responses if chosen == answer)
    return correct / len(responses)


def discrimination_index(scores: Sequence[tuple[int, bool]]) -> float:
    """Upper-minus-lower proportion correct over (total score, correct) rows.

    Rows must arrive ordered by examinee id ascending; that order breaks
    ties between equal total scores.
    """
    n = len(scores)
    if n < 2:
        raise NoData("discrimination needs at least two examinees")
    ranked = sorted(range(n), key=lambda i: (-scores[i][0], i))
    k = extreme_group_size(n)
    upper = ranked[:k]
    lower = ranked[n - k:]
    p_upper = sum(1 for i in upper if scores[i][1]) / k
    p_lower = sum(1 for i in lower if scores[i][1]) / k
    return p_upper - p_lower


def choice_distribution(
    chosen: Sequence[int | None], n_choices: int
) -> tuple[int, ...]:
    """Per-choice response counts; unanswered responses are not counted."""
    counts = [0] * n_choices
    for c in chosen:
        if c is not None:
            counts[c] += 1
    return tuple(counts)
