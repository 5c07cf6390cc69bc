"""Deterministic exam presentation shuffling.

One SplitMix64 stream per attempt seed drives a Fisher-Yates shuffle of
the question order, then (same stream, questions visited in authored
order) a shuffle of each question's choice indices. The server stores
only the 64-bit seed; the full presentation is a pure function of
(question list, choice counts, seed), so it can be reproduced and
golden-tested. Answers are always exchanged in authored indices; the
choice permutation is shipped to the client explicitly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 PRNG; state advances by the 64-bit golden gamma."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform draw in [0, n) by rejection against the last full block."""
        if n <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            z = self.next_u64()
            if z < limit:
                return z % n


def fisher_yates(items: list, rng: SplitMix64) -> list:
    """In-place Fisher-Yates from the last index downward."""
    for i in range(len(items) - 1, 0, -1):
        j = rng.below(i + 1)
        items[i], items[j] = items[j], items[i]
    return items


@dataclass(frozen=True)
class PresentationOrder:
    """Permutation of questions plus per-question choice permutations.

    ``question_order[display_pos]`` is the authored question index shown
    at that position. ``choice_orders`` is aligned with AUTHORED question
    order; ``choice_orders[qi][display_pos]`` is the authored choice index
    shown at that position for question ``qi``.
    """

    question_order: tuple[int, ...]
    choice_orders: tuple[tuple[int, ...], ...]

    def ordered(self, items: Sequence) -> list:
        """Reorder any sequence aligned with authored question order."""
        return [items[i] for i in self.question_order]

    def authored_choice(self, question_index: int, display_choice: int) -> int:
        return self.choice_orders[question_index][display_choice]

    def display_choice(self, question_index: int, authored_choice: int) -> int:
        return self.choice_orders[question_index].index(authored_choice)


def presentation_order(
    question_ids: Sequence, choice_counts: Sequence[int], seed: int
) -> PresentationOrder:
    """Deterministic presentation permutations for one attempt seed."""
    if len(question_ids) != len(choice_counts):
        raise ValueError("choice_counts must align with question_ids")
    if any(c < 1 for c in choice_counts):
        raise ValueError("every question needs at least one choice")
    rng = SplitMix64(seed)
    order = fisher_yates(list(range(len(question_ids))), rng)
    choice_orders = tuple(
        tuple(fisher_yates(list(range(count)), rng)) for count in choice_counts
    )
    return PresentationOrder(question_order=tuple(order), choice_orders=choice_orders)
