"""Exact head-to-head matchup counts and the thresholded beats relation.

Every probability is derived lazily from exact integer counts over all
C(48,5) = 1,712,304 boards; nothing is ever accumulated in floating point.
The paper-style relation keeps an edge u -> v when u's win probability
clears the threshold, with ties handled per :class:`TieConvention`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Protocol, Sequence

import numpy as np

from . import _tables
from .cards import HolePair, check_pairwise_disjoint
from .complexes import Tournament

BOARDS_PER_MATCHUP = 1_712_304  # C(48, 5)

HALF = Fraction(1, 2)


@dataclass(frozen=True, slots=True)
class MatchupCount:
    """Board counts (wins, ties, losses) for an ordered matchup."""

    wins: int
    ties: int
    losses: int

    def __post_init__(self) -> None:
        if min(self.wins, self.ties, self.losses) < 0:
            raise ValueError(f"negative count in {self}")

    @property
    def total(self) -> int:
        return self.wins + self.ties + self.losses

    def reversed(self) -> "MatchupCount":
        """Counts of the same matchup seen from the other seat."""
        return MatchupCount(self.losses, self.ties, self.wins)


class TieConvention(enum.Enum):
    """How tied boards contribute to a win probability."""

    STRICT_WIN = "strict"
    SPLIT_TIE = "split"

    def probability(self, counts: MatchupCount) -> Fraction:
        if counts.total == 0:
            raise ValueError("matchup has no boards")
        if self is TieConvention.STRICT_WIN:
            return Fraction(counts.wins, counts.total)
        return Fraction(2 * counts.wins + counts.ties, 2 * counts.total)


def win_probability(counts: MatchupCount, convention: TieConvention) -> Fraction:
    """Exact win probability of ``counts`` under ``convention``."""
    return convention.probability(counts)


def _normalize_threshold(p: float | Fraction) -> Fraction:
    q = Fraction(p)
    if not HALF <= q <= 1:
        raise ValueError(f"threshold must be in [1/2, 1], got {p}")
    return q


def beats_counts(
    counts: MatchupCount,
    convention: TieConvention = TieConvention.STRICT_WIN,
    p: float | Fraction = HALF,
) -> bool:
    """Threshold test on counts: prob > 1/2 at p = 1/2, prob >= p above."""
    q = _normalize_threshold(p)
    prob = convention.probability(counts)
    if q == HALF:
        return prob > HALF
    return prob >= q


def _counts_by_indices(
    cards_a: tuple[int, int], cards_b: tuple[int, int]
) -> tuple[int, int, int]:
    """Raw (wins, ties, losses) for four distinct card indices."""
    board_mask, board_rkey, board_skey = _tables.board_sums()
    dead = int(_tables.CARD_MASK[list(cards_a + cards_b)].sum())
    live = (board_mask & dead) == 0
    mask, rkey, skey = board_mask[live], board_rkey[live], board_skey[live]

    def values(cards: tuple[int, int]) -> np.ndarray:
        hole = list(cards)
        return _tables.eval_sums(
            mask + int(_tables.CARD_MASK[hole].sum()),
            rkey + int(_tables.CARD_RKEY[hole].sum()),
            skey + int(_tables.CARD_SKEY[hole].sum()),
            7,
        )

    va = values(cards_a)
    vb = values(cards_b)
    wins = int(np.count_nonzero(va > vb))
    ties = int(np.count_nonzero(va == vb))
    return wins, ties, len(va) - wins - ties


def matchup_counts(a: HolePair, b: HolePair) -> MatchupCount:
    """Exact (wins, ties, losses) for ``a`` vs ``b`` over every board."""
    check_pairwise_disjoint([a, b])
    wins, ties, losses = _counts_by_indices(a.card_indices, b.card_indices)
    return MatchupCount(wins, ties, losses)


class CountsProvider(Protocol):
    """Anything that can produce exact matchup counts for ordered pairs."""

    def counts(self, a: HolePair, b: HolePair) -> MatchupCount: ...


class LiveCounts:
    """On-demand :func:`matchup_counts` with memoization.

    Lets relation and filtration builders run on small hand sets without a
    precomputed full matrix; symmetric lookups reuse the reversed counts.
    """

    def __init__(self) -> None:
        self._cache: dict[tuple[int, int], MatchupCount] = {}

    def counts(self, a: HolePair, b: HolePair) -> MatchupCount:
        key = (a.pair_index, b.pair_index)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        swapped = self._cache.get((key[1], key[0]))
        if swapped is not None:
            result = swapped.reversed()
        else:
            result = matchup_counts(a, b)
        self._cache[key] = result
        return result


def beats(
    a: HolePair,
    b: HolePair,
    provider: CountsProvider,
    convention: TieConvention = TieConvention.STRICT_WIN,
    p: float | Fraction = HALF,
) -> bool:
    """True iff ``a`` beats ``b`` at threshold ``p`` under ``convention``."""
    return beats_counts(provider.counts(a, b), convention, p)


def relation_at(
    provider: CountsProvider,
    vertices: Sequence[HolePair],
    convention: TieConvention = TieConvention.STRICT_WIN,
    p: float | Fraction = HALF,
) -> Tournament:
    """The beats relation on ``vertices`` as a Tournament with edge probabilities.

    Vertex labels are the 4-character pair texts.  Vertices must be pairwise
    disjoint as card sets; overlapping inputs raise an error listing the
    shared cards.
    """
    check_pairwise_disjoint(vertices)
    q = _normalize_threshold(p)
    labels = [str(v) for v in vertices]
    edges: list[tuple[str, str]] = []
    probabilities: dict[tuple[str, str], Fraction] = {}
    for i in range(len(vertices)):
        for j in range(i + 1, len(vertices)):
            counts = provider.counts(vertices[i], vertices[j])
            prob = convention.probability(counts)
            if beats_counts(counts, convention, q):
                edges.append((labels[i], labels[j]))
                probabilities[(labels[i], labels[j])] = prob
            elif beats_counts(counts.reversed(), convention, q):
                edges.append((labels[j], labels[i]))
                probabilities[(labels[j], labels[i])] = 1 - prob
    return Tournament(labels, edges, probabilities)


def distinct_win_probabilities(
    provider: CountsProvider,
    vertices: Sequence[HolePair],
    convention: TieConvention = TieConvention.STRICT_WIN,
) -> list[Fraction]:
    """Distinct win probabilities > 1/2 among the matchups, descending."""
    check_pairwise_disjoint(vertices)
    seen: set[Fraction] = set()
    for i in range(len(vertices)):
        for j in range(i + 1, len(vertices)):
            prob = convention.probability(provider.counts(vertices[i], vertices[j]))
            for candidate in (prob, 1 - prob):
                if candidate > HALF:
                    seen.add(candidate)
    return sorted(seen, reverse=True)


def iter_matchup_probabilities(
    provider: CountsProvider,
    vertices: Sequence[HolePair],
    convention: TieConvention = TieConvention.STRICT_WIN,
) -> Iterable[tuple[HolePair, HolePair, Fraction]]:
    """Yield (winner, loser, probability) for every decided unordered matchup."""
    check_pairwise_disjoint(vertices)
    for i in range(len(vertices)):
        for j in range(i + 1, len(vertices)):
            prob = convention.probability(provider.counts(vertices[i], vertices[j]))
            if prob > HALF:
                yield (vertices[i], vertices[j], prob)
            elif prob < HALF:
                yield (vertices[j], vertices[i], 1 - prob)
