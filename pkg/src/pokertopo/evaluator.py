"""Total-order evaluation of 5- and 7-card poker hands.

Two deliberately separate implementations:

* :func:`rank5` ranks exactly five cards directly from sorted ranks and
  counts, and :func:`rank7_oracle` is its naive maximum over the 21
  five-card subsets of seven cards;
* :func:`rank7` is the fast table-driven path (see ``_tables``) and shares
  no evaluation logic with the two above.

Either path produces the same packed values, so the pair acts as a
correctness check of the hot path.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from . import _tables
from .cards import Card

CATEGORY_NAMES = (
    "high card",
    "pair",
    "two pair",
    "three of a kind",
    "straight",
    "flush",
    "full house",
    "four of a kind",
    "straight flush",
)


@dataclass(frozen=True, slots=True, order=True)
class HandValue:
    """Comparable strength of a best five-card hand.

    ``packed`` puts the category above five 4-bit tiebreak ranks, so the
    integer order equals hand order and equal packed values mean a tie.
    """

    packed: int

    @classmethod
    def from_parts(cls, category: int, tiebreak: tuple[int, ...]) -> "HandValue":
        return cls(_tables.pack_value(category, tiebreak))

    @property
    def category(self) -> int:
        return self.packed >> _tables.CATEGORY_SHIFT

    @property
    def tiebreak(self) -> tuple[int, ...]:
        return _tables.unpack_value(self.packed)[1]

    @property
    def category_name(self) -> str:
        return CATEGORY_NAMES[self.category]

    def __str__(self) -> str:
        ranks = " ".join("23456789TJQKA"[r - 2] for r in self.tiebreak)
        return f"{self.category_name} [{ranks}]"


def _check_cards(cards: Sequence[Card], expected: int) -> tuple[int, ...]:
    indices = tuple(c.index for c in cards)
    if len(indices) != expected:
        raise ValueError(f"expected {expected} cards, got {len(indices)}")
    if len(set(indices)) != expected:
        dupes = sorted({i for i in indices if indices.count(i) > 1})
        names = " ".join(str(Card.from_index(i)) for i in dupes)
        raise ValueError(f"duplicate cards: {names}")
    return indices


def rank5(cards: Sequence[Card]) -> HandValue:
    """Rank exactly five distinct cards under standard poker rules.

    The ace plays low in the wheel A-2-3-4-5.
    """
    _check_cards(cards, 5)
    ranks = sorted((c.rank for c in cards), reverse=True)
    flush = len({c.suit for c in cards}) == 1
    distinct = sorted(set(ranks), reverse=True)

    straight_high = 0
    if len(distinct) == 5:
        if distinct[0] - distinct[4] == 4:
            straight_high = distinct[0]
        elif distinct == [14, 5, 4, 3, 2]:
            straight_high = 5

    count = {r: ranks.count(r) for r in distinct}
    by_count = sorted(distinct, key=lambda r: (count[r], r), reverse=True)

    if flush and straight_high:
        return HandValue.from_parts(8, (straight_high,))
    if count[by_count[0]] == 4:
        return HandValue.from_parts(7, (by_count[0], by_count[1]))
    if count[by_count[0]] == 3 and count[by_count[1]] == 2:
        return HandValue.from_parts(6, (by_count[0], by_count[1]))
    if flush:
        return HandValue.from_parts(5, tuple(ranks))
    if straight_high:
        return HandValue.from_parts(4, (straight_high,))
    if count[by_count[0]] == 3:
        return HandValue.from_parts(3, tuple(by_count[:3]))
    if count[by_count[0]] == 2 and count[by_count[1]] == 2:
        return HandValue.from_parts(2, tuple(by_count[:3]))
    if count[by_count[0]] == 2:
        return HandValue.from_parts(1, tuple(by_count[:4]))
    return HandValue.from_parts(0, tuple(ranks))


def rank7(cards: Sequence[Card]) -> HandValue:
    """Rank the best five-card hand from seven distinct cards (fast path)."""
    indices = _check_cards(cards, 7)
    return HandValue(_tables.eval_scalar(indices))


def rank7_oracle(cards: Sequence[Card]) -> HandValue:
    """Naive reference for :func:`rank7`: max of rank5 over the 21 subsets."""
    _check_cards(cards, 7)
    return max(rank5(subset) for subset in combinations(cards, 5))


def five_card_census(hands: Iterable[Sequence[Card]] | None = None) -> tuple[int, ...]:
    """Category frequencies, by exhaustive :func:`rank5` over all C(52,5) hands.

    A non-default ``hands`` iterable restricts the census to those hands.
    Used as the evaluator's self-check against the classic frequency table.
    """
    census = [0] * 9
    if hands is None:
        deck = [Card.from_index(i) for i in range(52)]
        shift = _tables.CATEGORY_SHIFT
        evaluate = rank5
        for combo in combinations(deck, 5):
            census[evaluate(combo).packed >> shift] += 1
    else:
        for hand in hands:
            census[rank5(hand).category] += 1
    return tuple(census)
