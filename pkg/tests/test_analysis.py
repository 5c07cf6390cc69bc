"""Item analysis indices against brute-force recomputation."""
from __future__ import annotations

import random

import pytest

from mockboard.core import (
    choice_distribution,
    difficulty_index,
    discrimination_index,
    extreme_group_size,
)
from mockboard.errors import NoData


def brute_difficulty(responses):
    hits = 0
    for chosen, correct in responses:
        if chosen is not None and chosen == correct:
            hits += 1
    return hits / len(responses)


def brute_discrimination(scores):
    # Re-derivation with explicit decorate-sort: (score desc, position asc).
    n = len(scores)
    decorated = sorted(
        [(total, idx, correct) for idx, (total, correct) in enumerate(scores)],
        key=lambda t: (-t[0], t[1]),
    )
    k = extreme_group_size(n)
    upper = decorated[:k]
    lower = decorated[-k:]
    p_u = sum(1 for _, _, c in upper if c) / k
    p_l = sum(1 for _, _, c in lower if c) / k
    return p_u - p_l


class TestDifficulty:
    def test_three_of_four(self):
        rs = [(0, 0), (1, 1), (2, 2), (0, 3)]
        assert difficulty_index(rs) == 0.75

    def test_all_correct(self):
        assert difficulty_index([(1, 1)] * 6) == 1.0

    def test_all_unanswered(self):
        assert difficulty_index([(None, 2)] * 5) == 0.0

    def test_empty_raises(self):
        with pytest.raises(NoData):
            difficulty_index([])


class TestDiscrimination:
    def test_perfect_separation(self):
        # n=10, k=3; top three correct, bottom three wrong.
        scores = [(10 - i, i < 3) for i in range(10)]
        assert discrimination_index(scores) == 1.0

    def test_uniform_groups(self):
        assert discrimination_index([(i, True) for i in range(10)]) == 0.0

    def test_inverted_pair(self):
        # n=2, k=1; higher scorer wrong, lower scorer correct.
        assert discrimination_index([(9, False), (2, True)]) == -1.0

    def test_tie_break_is_input_position(self):
        # Equal totals: first row lands in the upper group.
        assert discrimination_index([(5, True), (5, False)]) == 1.0
        assert discrimination_index([(5, False), (5, True)]) == -1.0

    def test_single_examinee_raises(self):
        with pytest.raises(NoData):
            discrimination_index([(3, True)])


class TestGroupSize:
    @pytest.mark.parametrize("n,k", [(2, 1), (3, 1), (4, 1), (10, 3), (30, 8), (40, 11)])
    def test_values(self, n, k):
        assert extreme_group_size(n) == k

    def test_half_up_at_fifty(self):
        # 0.27*50 = 13.5 exactly; half-up -> 14.
        assert extreme_group_size(50) == 14


class TestOracleEquivalence:
    def test_random_cohorts(self):
        rng = random.Random(555)
        for _ in range(500):
            n = rng.randint(2, 30)
            total_q = rng.randint(1, 20)
            correct_ix = rng.randrange(4)
            responses = []
            scores = []
            for _ in range(n):
                chosen = None if rng.random() < 0.15 else rng.randrange(4)
                responses.append((chosen, correct_ix))
                scores.append((rng.randint(0, total_q), chosen == correct_ix))
            assert abs(difficulty_index(responses) - brute_difficulty(responses)) < 1e-9
            assert abs(discrimination_index(scores) - brute_discrimination(scores)) < 1e-9


class TestChoiceDistribution:
    def test_counts_and_unanswered(self):
        dist = choice_distribution([0, 0, 2, None, 1, None], 4)
        assert dist == (2, 1, 1, 0)
        assert sum(dist) <= 6
