"""Canonical card, hole-pair and suit-symmetry encodings.

Cards are indexed 0..51 by ``4*(rank-2) + suit`` with suits ordered
clubs, diamonds, hearts, spades (alphabetically), so index order equals
(rank, suit) order.  Hole pairs are the 1326 unordered 2-subsets of the
deck, numbered in colexicographic order of their card indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

RANK_CHARS = "23456789TJQKA"
SUIT_CHARS = "cdhs"
SUIT_SYMBOLS = "♣♦♥♠"  # ♣ ♦ ♥ ♠

NUM_CARDS = 52
NUM_HOLE_PAIRS = 1326  # C(52, 2)


class CardParseError(ValueError):
    """Raised for malformed card text; names the offending character."""


class OverlappingCardsError(ValueError):
    """Raised when hole pairs that must be disjoint share cards.

    ``overlaps`` lists ``(pair_a, pair_b, shared_cards)`` triples.
    """

    def __init__(self, overlaps: list[tuple["HolePair", "HolePair", tuple["Card", ...]]]):
        self.overlaps = overlaps
        parts = ", ".join(
            f"{a} / {b} share {' '.join(str(c) for c in shared)}"
            for a, b, shared in overlaps
        )
        super().__init__(f"hole pairs are not disjoint: {parts}")


@dataclass(frozen=True, slots=True, order=True)
class Card:
    """A playing card; ``rank`` in 2..14 (14 = ace), ``suit`` in 0..3."""

    rank: int
    suit: int

    def __post_init__(self) -> None:
        if not 2 <= self.rank <= 14:
            raise ValueError(f"rank out of range: {self.rank}")
        if not 0 <= self.suit <= 3:
            raise ValueError(f"suit out of range: {self.suit}")

    @property
    def index(self) -> int:
        """Dense 0..51 index: 4*(rank-2) + suit."""
        return 4 * (self.rank - 2) + self.suit

    @classmethod
    def from_index(cls, index: int) -> "Card":
        if not 0 <= index < NUM_CARDS:
            raise ValueError(f"card index out of range: {index}")
        return cls(rank=index // 4 + 2, suit=index % 4)

    @classmethod
    def from_text(cls, text: str) -> "Card":
        return card_from_text(text)

    def __str__(self) -> str:
        return RANK_CHARS[self.rank - 2] + SUIT_CHARS[self.suit]

    def pretty(self) -> str:
        return RANK_CHARS[self.rank - 2] + SUIT_SYMBOLS[self.suit]


def card_from_text(text: str) -> Card:
    """Parse two-character card text like ``"As"`` or ``"Tc"``."""
    if len(text) != 2:
        raise CardParseError(f"expected 2 characters, got {text!r}")
    rank_char, suit_char = text[0], text[1]
    if rank_char not in RANK_CHARS:
        raise CardParseError(f"bad rank character {rank_char!r} in {text!r}")
    if suit_char not in SUIT_CHARS:
        raise CardParseError(f"bad suit character {suit_char!r} in {text!r}")
    return Card(rank=RANK_CHARS.index(rank_char) + 2, suit=SUIT_CHARS.index(suit_char))


@dataclass(frozen=True, slots=True, order=True)
class HolePair:
    """An unordered pair of distinct cards, stored with ``lo.index < hi.index``."""

    lo: Card
    hi: Card

    def __post_init__(self) -> None:
        if self.lo.index >= self.hi.index:
            raise ValueError(f"hole pair must satisfy lo < hi, got {self.lo}, {self.hi}")

    @classmethod
    def of(cls, a: Card, b: Card) -> "HolePair":
        """Build from two cards in either order."""
        if a.index == b.index:
            raise ValueError(f"hole pair needs two distinct cards, got {a} twice")
        return cls(a, b) if a.index < b.index else cls(b, a)

    @classmethod
    def from_text(cls, text: str) -> "HolePair":
        """Parse ``"AsKh"`` or ``"As Kh"``."""
        compact = text.replace(" ", "")
        if len(compact) != 4:
            raise CardParseError(f"expected 4 card characters, got {text!r}")
        return cls.of(card_from_text(compact[:2]), card_from_text(compact[2:]))

    @classmethod
    def from_index(cls, index: int) -> "HolePair":
        """Inverse of :func:`pair_index` (colex order)."""
        if not 0 <= index < NUM_HOLE_PAIRS:
            raise ValueError(f"pair index out of range: {index}")
        # largest hi with C(hi,2) <= index
        hi = int(((1 + 8 * index) ** 0.5 + 1) / 2)
        while hi * (hi - 1) // 2 > index:
            hi -= 1
        while (hi + 1) * hi // 2 <= index:
            hi += 1
        lo = index - hi * (hi - 1) // 2
        return cls(Card.from_index(lo), Card.from_index(hi))

    @property
    def pair_index(self) -> int:
        return pair_index(self)

    @property
    def cards(self) -> tuple[Card, Card]:
        return (self.lo, self.hi)

    @property
    def card_indices(self) -> tuple[int, int]:
        return (self.lo.index, self.hi.index)

    def overlaps(self, other: "HolePair") -> tuple[Card, ...]:
        """Cards shared with ``other`` (empty tuple when disjoint)."""
        mine = {c.index for c in self.cards}
        return tuple(c for c in other.cards if c.index in mine)

    def is_disjoint(self, other: "HolePair") -> bool:
        return not self.overlaps(other)

    def __str__(self) -> str:
        return f"{self.lo}{self.hi}"

    def pretty(self) -> str:
        return f"{self.lo.pretty()}{self.hi.pretty()}"


def pair_index(pair: HolePair) -> int:
    """Colex position of (lo, hi) among all 2-subsets of 0..51."""
    lo, hi = pair.card_indices
    return hi * (hi - 1) // 2 + lo


def all_hole_pairs() -> list[HolePair]:
    """All 1326 hole pairs in pair_index (colex) order."""
    return [HolePair.from_index(i) for i in range(NUM_HOLE_PAIRS)]


@dataclass(frozen=True, slots=True)
class SuitPermutation:
    """A bijection on the four suits, as the image tuple of (0, 1, 2, 3)."""

    mapping: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        if sorted(self.mapping) != [0, 1, 2, 3]:
            raise ValueError(f"not a suit permutation: {self.mapping}")

    @classmethod
    def identity(cls) -> "SuitPermutation":
        return cls((0, 1, 2, 3))

    @classmethod
    def from_pairs(cls, swaps: Iterable[tuple[int, int]]) -> "SuitPermutation":
        """Permutation exchanging each listed pair of suits."""
        mapping = [0, 1, 2, 3]
        for a, b in swaps:
            mapping[a], mapping[b] = mapping[b], mapping[a]
        return cls(tuple(mapping))

    def compose(self, inner: "SuitPermutation") -> "SuitPermutation":
        """self after inner: (self.compose(inner))(s) == self(inner(s))."""
        return SuitPermutation(tuple(self.mapping[inner.mapping[s]] for s in range(4)))

    def inverse(self) -> "SuitPermutation":
        inv = [0, 0, 0, 0]
        for s, t in enumerate(self.mapping):
            inv[t] = s
        return SuitPermutation(tuple(inv))

    def apply_to_card(self, card: Card) -> Card:
        return Card(rank=card.rank, suit=self.mapping[card.suit])

    def apply_to_pair(self, pair: HolePair) -> HolePair:
        return HolePair.of(self.apply_to_card(pair.lo), self.apply_to_card(pair.hi))

    def __str__(self) -> str:
        return "".join(SUIT_CHARS[s] for s in self.mapping)


@lru_cache(maxsize=1)
def all_suit_permutations() -> tuple[SuitPermutation, ...]:
    """All 24 suit permutations, in lexicographic order of their mapping."""
    return tuple(SuitPermutation(p) for p in permutations(range(4)))


def apply_suit_permutation(pair: HolePair, sigma: SuitPermutation) -> HolePair:
    """Map both cards' suits through ``sigma``, re-canonicalized to lo < hi."""
    return sigma.apply_to_pair(pair)


def _matchup_key(a: HolePair, b: HolePair) -> tuple[int, int, int, int]:
    return (a.lo.index, a.hi.index, b.lo.index, b.hi.index)


def canonical_matchup(
    a: HolePair, b: HolePair
) -> tuple[HolePair, HolePair, SuitPermutation]:
    """Least image of (a, b) under the 24 simultaneous suit permutations.

    Returns the canonical representative pair and a witnessing permutation
    sigma with (sigma a, sigma b) equal to the representative.  Images are
    compared lexicographically by (a.lo, a.hi, b.lo, b.hi) card indices;
    among permutations reaching the minimum the lexicographically first
    mapping wins, so the witness is deterministic.
    """
    shared = a.overlaps(b)
    if shared:
        raise OverlappingCardsError([(a, b, shared)])
    best: tuple[int, int, int, int] | None = None
    best_pair: tuple[HolePair, HolePair] | None = None
    best_sigma: SuitPermutation | None = None
    for sigma in all_suit_permutations():
        ia = sigma.apply_to_pair(a)
        ib = sigma.apply_to_pair(b)
        key = _matchup_key(ia, ib)
        if best is None or key < best:
            best = key
            best_pair = (ia, ib)
            best_sigma = sigma
    assert best_pair is not None and best_sigma is not None
    return (best_pair[0], best_pair[1], best_sigma)


def parse_hand_list(text: str) -> list[HolePair]:
    """Parse a comma- or whitespace-separated list of hole pairs.

    Each token is either 4-character card text ("Ac2c") or a pair_index
    integer.
    """
    tokens = [t for t in text.replace(",", " ").split() if t]
    hands = []
    for tok in tokens:
        if tok.isdigit():
            hands.append(HolePair.from_index(int(tok)))
        else:
            hands.append(HolePair.from_text(tok))
    return hands


def check_pairwise_disjoint(hands: Sequence[HolePair]) -> None:
    """Raise :class:`OverlappingCardsError` listing every overlapping pair."""
    overlaps = []
    for i in range(len(hands)):
        for j in range(i + 1, len(hands)):
            shared = hands[i].overlaps(hands[j])
            if shared:
                overlaps.append((hands[i], hands[j], shared))
    if overlaps:
        raise OverlappingCardsError(overlaps)
