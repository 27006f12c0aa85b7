from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import pytest

from pokertopo import (
    BOARDS_PER_MATCHUP,
    Card,
    HolePair,
    LiveCounts,
    MatchupCount,
    OverlappingCardsError,
    TieConvention,
    beats,
    beats_counts,
    matchup_counts,
    relation_at,
    win_probability,
)
from pokertopo import reference

SPLIT = TieConvention.SPLIT_TIE
STRICT = TieConvention.STRICT_WIN


def pair(text: str) -> HolePair:
    return HolePair.from_text(text)


def test_matchup_counts_golden_triangle_edge(live_counts):
    counts = live_counts.counts(pair("Ac2c"), pair("3c5c"))
    assert (counts.wins, counts.ties, counts.losses) == (1_005_468, 12_168, 694_668)
    assert counts.total == BOARDS_PER_MATCHUP


def test_matchup_counts_antisymmetry():
    a, b = pair("AhKh"), pair("QsQd")
    forward = matchup_counts(a, b)
    backward = matchup_counts(b, a)
    assert forward.wins == backward.losses
    assert forward.ties == backward.ties
    assert forward.losses == backward.wins
    assert forward.total == backward.total == BOARDS_PER_MATCHUP


def test_matchup_counts_rejects_overlap():
    with pytest.raises(OverlappingCardsError):
        matchup_counts(pair("AcKc"), pair("AcQd"))


def test_enumeration_order_does_not_change_counts():
    # recount after shuffling the board enumeration order
    from pokertopo import _tables
    from pokertopo.equity import _counts_by_indices

    a, b = (0, 13), (26, 39)
    reference_counts = _counts_by_indices(a, b)
    mask, rkey, skey = _tables.board_sums()
    dead = int(_tables.CARD_MASK[list(a + b)].sum())
    live = (mask & dead) == 0
    mask, rkey, skey = mask[live], rkey[live], skey[live]
    perm = np.random.default_rng(3).permutation(len(mask))
    mask, rkey, skey = mask[perm], rkey[perm], skey[perm]

    def values(hole):
        hole = list(hole)
        return _tables.eval_sums(
            mask + int(_tables.CARD_MASK[hole].sum()),
            rkey + int(_tables.CARD_RKEY[hole].sum()),
            skey + int(_tables.CARD_SKEY[hole].sum()),
            7,
        )

    va, vb = values(a), values(b)
    wins = int(np.count_nonzero(va > vb))
    ties = int(np.count_nonzero(va == vb))
    assert (wins, ties, len(va) - wins - ties) == reference_counts


def test_win_probability_conventions():
    balanced = MatchupCount(5, 5, 5)
    assert win_probability(balanced, SPLIT) == Fraction(1, 2)
    assert win_probability(balanced, STRICT) == Fraction(1, 3)
    sweep = MatchupCount(BOARDS_PER_MATCHUP, 0, 0)
    assert win_probability(sweep, SPLIT) == 1
    assert win_probability(sweep, STRICT) == 1


def test_split_probabilities_of_both_seats_sum_to_one():
    rng = random.Random(17)
    for _ in range(20):
        w, t = rng.randrange(1000), rng.randrange(1000)
        l = rng.randrange(1000) + 1
        counts = MatchupCount(w, t, l)
        assert win_probability(counts, SPLIT) + win_probability(counts.reversed(), SPLIT) == 1


def test_ace_pairs_tie_dominated(live_counts):
    counts = live_counts.counts(pair("AcAd"), pair("AhAs"))
    assert (counts.wins, counts.ties, counts.losses) == (37_210, 1_637_884, 37_210)
    assert win_probability(counts, STRICT) < Fraction(1, 2)
    assert win_probability(counts.reversed(), STRICT) < Fraction(1, 2)
    assert win_probability(counts, SPLIT) == Fraction(1, 2)
    # hence no edge under either convention
    for convention in (STRICT, SPLIT):
        assert not beats_counts(counts, convention)
        assert not beats_counts(counts.reversed(), convention)


def test_beats_threshold_semantics():
    counts = MatchupCount(900_000, 12_304, 800_000)
    prob = win_probability(counts, STRICT)
    assert beats_counts(counts, STRICT, Fraction(1, 2))
    assert beats_counts(counts, STRICT, prob)  # >= at p > 1/2
    assert not beats_counts(counts, STRICT, prob + Fraction(1, 10**9))
    exactly_half = MatchupCount(BOARDS_PER_MATCHUP // 2, 0, BOARDS_PER_MATCHUP // 2)
    assert not beats_counts(exactly_half, STRICT)  # strictly more than 1/2 at p=1/2
    with pytest.raises(ValueError):
        beats_counts(counts, STRICT, Fraction(1, 4))
    with pytest.raises(ValueError):
        beats_counts(counts, STRICT, 2)


def test_beats_monotone_in_threshold(live_counts):
    a, b = pair("Ac2c"), pair("3c5c")
    thresholds = [Fraction(1, 2), Fraction(51, 100), Fraction(59, 100), Fraction(3, 5), 1]
    results = [beats(a, b, live_counts, SPLIT, p) for p in thresholds]
    # once false at a threshold, false at every higher threshold
    assert results == sorted(results, reverse=True)


def test_beats_never_both_ways(live_counts):
    rng = random.Random(23)
    for _ in range(10):
        cards = rng.sample(range(52), 4)
        a = HolePair.of(Card.from_index(cards[0]), Card.from_index(cards[1]))
        b = HolePair.of(Card.from_index(cards[2]), Card.from_index(cards[3]))
        counts = live_counts.counts(a, b)
        for convention in (STRICT, SPLIT):
            assert not (
                beats_counts(counts, convention) and beats_counts(counts.reversed(), convention)
            )


def test_spec_beats_examples(live_counts):
    assert beats(pair("Ac2c"), pair("3c5c"), live_counts, SPLIT, Fraction(1, 2))
    assert not beats(pair("3c5c"), pair("Ac2c"), live_counts, SPLIT, Fraction(1, 2))
    assert not beats(pair("3c3d"), pair("AcTc"), live_counts, SPLIT, Fraction(51, 100))


def test_relation_at_triangle_is_three_cycle(live_counts, triangle_hands):
    tournament = relation_at(live_counts, triangle_hands, SPLIT)
    labels = [str(h) for h in triangle_hands]
    assert tournament.beats(labels[0], labels[1])
    assert tournament.beats(labels[1], labels[2])
    assert tournament.beats(labels[2], labels[0])
    assert len(tournament.edges) == 3
    # edge probabilities are carried exactly
    prob = tournament.probabilities[(labels[0], labels[1])]
    assert prob == Fraction(2 * 1_005_468 + 12_168, 2 * BOARDS_PER_MATCHUP)


def test_relation_at_p_one_is_empty(live_counts, triangle_hands):
    for a in triangle_hands:
        for b in triangle_hands:
            if a != b:
                counts = live_counts.counts(a, b)
                assert counts.ties + counts.losses > 0  # nothing is won with certainty
    tournament = relation_at(live_counts, triangle_hands, SPLIT, 1)
    assert not tournament.edges


def test_relation_at_structured_overlap_error(live_counts):
    hands = [pair("Ac2c"), pair("Ac5c"), pair("2d5d")]
    with pytest.raises(OverlappingCardsError) as err:
        relation_at(live_counts, hands, SPLIT)
    (a, b, shared), = err.value.overlaps
    assert {str(c) for c in shared} == {"Ac"}


def test_live_counts_reuses_reverse_direction(live_counts):
    a, b = pair("Ac2c"), pair("3c5c")
    forward = live_counts.counts(a, b)
    backward = live_counts.counts(b, a)
    assert backward == forward.reversed()


def test_paper_convention_pinned_by_goldens(live_counts):
    """The published equities are reproduced by split-tie, not strict-win."""
    for a_text, b_text, golden, approx in reference.TRIANGLE_MATCHUPS:
        counts = live_counts.counts(pair(a_text), pair(b_text))
        assert (counts.wins, counts.ties, counts.losses) == golden
        assert abs(float(win_probability(counts, SPLIT)) - approx) <= reference.TRIANGLE_TOLERANCE
    # under strict-win the middle matchup would not even be an edge
    middle = live_counts.counts(pair("3c5c"), pair("2d2h"))
    assert win_probability(middle, STRICT) < Fraction(1, 2)
    assert win_probability(middle, SPLIT) > Fraction(1, 2)
