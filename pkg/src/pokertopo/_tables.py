"""Internal lookup tables for table-driven hand evaluation.

A hand of k cards is summarized by three additive keys:

* ``rkey`` = sum of 8**rank_index per card — determines the rank multiset
  (counts <= 7 < 8 per rank, so digits never carry);
* ``skey`` = sum of 8**suit per card — determines the suit counts;
* ``mask`` = OR of 1 << (13*suit + rank_index) per card — per-suit rank sets.

With 7 cards a flush excludes quads and full houses, so the best hand is
either the best flush/straight-flush from the >=5-card suit, or the best
non-flush hand, which depends only on the rank multiset.  Both lookups are
precomputed; all keys are plain sums of per-card constants, which makes
whole-board batches cheap with numpy.

Packed hand values place the category above five 4-bit tiebreak ranks, so
integer comparison equals hand comparison.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import numpy as np

# per-card constants, indexed by card index (4*(rank-2) + suit)
CARD_MASK = np.array([1 << (13 * (c % 4) + c // 4) for c in range(52)], dtype=np.int64)
CARD_RKEY = np.array([8 ** (c // 4) for c in range(52)], dtype=np.int64)
CARD_SKEY = np.array([8 ** (c % 4) for c in range(52)], dtype=np.int64)

TIEBREAK_SLOTS = 5
CATEGORY_SHIFT = 4 * TIEBREAK_SLOTS


def pack_value(category: int, tiebreak: tuple[int, ...]) -> int:
    """Pack (category, tiebreak ranks) into one comparable integer."""
    value = category
    padded = tuple(tiebreak) + (0,) * (TIEBREAK_SLOTS - len(tiebreak))
    for rank in padded:
        value = (value << 4) | rank
    return value


def unpack_value(packed: int) -> tuple[int, tuple[int, ...]]:
    category = packed >> CATEGORY_SHIFT
    ranks = []
    for slot in range(TIEBREAK_SLOTS):
        r = (packed >> (4 * (TIEBREAK_SLOTS - 1 - slot))) & 0xF
        if r == 0:
            break
        ranks.append(r)
    return category, tuple(ranks)


def straight_high(present: int) -> int:
    """Highest straight top rank in a 13-bit rank-set mask, or 0.

    Bit r-2 represents rank r; the wheel A-2-3-4-5 counts with high card 5.
    """
    for high in range(14, 5, -1):
        if (present >> (high - 6)) & 0b11111 == 0b11111:
            return high
    if present & 0b1000000001111 == 0b1000000001111:
        return 5
    return 0


def _top_ranks(present: int, count: int) -> list[int]:
    out = []
    for r in range(14, 1, -1):
        if (present >> (r - 2)) & 1:
            out.append(r)
            if len(out) == count:
                break
    return out


def _best_nonflush(counts: list[int]) -> int:
    """Best packed value from rank counts alone (flushes impossible here)."""
    present = 0
    for i, c in enumerate(counts):
        if c:
            present |= 1 << i
    quads = [i + 2 for i in range(12, -1, -1) if counts[i] == 4]
    trips = [i + 2 for i in range(12, -1, -1) if counts[i] == 3]
    pairs = [i + 2 for i in range(12, -1, -1) if counts[i] == 2]
    if quads:
        kicker = max(r for r in _top_ranks(present, 13) if r != quads[0])
        return pack_value(7, (quads[0], kicker))
    if trips and (len(trips) > 1 or pairs):
        return pack_value(6, (trips[0], max(trips[1:] + pairs)))
    high = straight_high(present)
    if high:
        return pack_value(4, (high,))
    if trips:
        kickers = [r for r in _top_ranks(present, 13) if r != trips[0]][:2]
        return pack_value(3, (trips[0], *kickers))
    if len(pairs) >= 2:
        kicker = max(r for r in _top_ranks(present, 13) if r not in pairs[:2])
        return pack_value(2, (pairs[0], pairs[1], kicker))
    if pairs:
        kickers = [r for r in _top_ranks(present, 13) if r != pairs[0]][:3]
        return pack_value(1, (pairs[0], *kickers))
    return pack_value(0, tuple(_top_ranks(present, 5)))


@lru_cache(maxsize=None)
def _nonflush_table(hand_size: int) -> tuple[np.ndarray, np.ndarray]:
    """(sorted rkeys, packed values) over all rank multisets of hand_size."""
    keys: list[int] = []
    values: list[int] = []
    counts = [0] * 13

    def recurse(rank_idx: int, remaining: int, key: int) -> None:
        if rank_idx == 13:
            if remaining == 0:
                keys.append(key)
                values.append(_best_nonflush(counts))
            return
        for c in range(min(4, remaining) + 1):
            counts[rank_idx] = c
            recurse(rank_idx + 1, remaining - c, key + c * 8**rank_idx)
        counts[rank_idx] = 0

    recurse(0, hand_size, 0)
    key_arr = np.array(keys, dtype=np.int64)
    val_arr = np.array(values, dtype=np.int64)
    order = np.argsort(key_arr)
    return key_arr[order], val_arr[order]


@lru_cache(maxsize=1)
def _flush_table() -> np.ndarray:
    """Packed flush / straight-flush value per 13-bit suited rank set."""
    table = np.zeros(1 << 13, dtype=np.int64)
    for mask in range(1 << 13):
        if mask.bit_count() < 5:
            continue
        high = straight_high(mask)
        if high:
            table[mask] = pack_value(8, (high,))
        else:
            table[mask] = pack_value(5, tuple(_top_ranks(mask, 5)))
    return table


@lru_cache(maxsize=1)
def _flush_suit_table() -> np.ndarray:
    """suit+1 of a >=5-card suit per skey (0 when no flush); skeys < 8**4."""
    table = np.zeros(8**4, dtype=np.int64)
    for key in range(8**4):
        for suit in range(4):
            if (key >> (3 * suit)) & 0x7 >= 5:
                table[key] = suit + 1
    return table


def eval_sums(mask: np.ndarray, rkey: np.ndarray, skey: np.ndarray,
              hand_size: int) -> np.ndarray:
    """Packed values for hands given as additive key arrays."""
    nf_keys, nf_vals = _nonflush_table(hand_size)
    values = nf_vals[np.searchsorted(nf_keys, rkey)]
    flush_suit = _flush_suit_table()[skey]
    flushed = np.nonzero(flush_suit)[0]
    if flushed.size:
        shift = (flush_suit[flushed] - 1) * 13
        suited = (mask[flushed] >> shift) & 0x1FFF
        values[flushed] = _flush_table()[suited]
    return values


def eval_cards(hands: np.ndarray) -> np.ndarray:
    """Packed values for an (n, k) array of card indices, k in {5, 6, 7}."""
    mask = CARD_MASK[hands].sum(axis=1)
    rkey = CARD_RKEY[hands].sum(axis=1)
    skey = CARD_SKEY[hands].sum(axis=1)
    return eval_sums(mask, rkey, skey, hands.shape[1])


@lru_cache(maxsize=None)
def _scalar_tables(hand_size: int) -> tuple[dict[int, int], list[int], list[int]]:
    nf_keys, nf_vals = _nonflush_table(hand_size)
    return (
        dict(zip(nf_keys.tolist(), nf_vals.tolist())),
        _flush_table().tolist(),
        _flush_suit_table().tolist(),
    )


def eval_scalar(card_indices: tuple[int, ...]) -> int:
    """Packed value of one hand, avoiding numpy call overhead."""
    nonflush, flush, flush_suit = _scalar_tables(len(card_indices))
    rkey = 0
    skey = 0
    mask = 0
    for c in card_indices:
        rkey += 8 ** (c // 4)
        skey += 8 ** (c % 4)
        mask |= 1 << (13 * (c % 4) + c // 4)
    suit = flush_suit[skey]
    if suit:
        return flush[(mask >> (13 * (suit - 1))) & 0x1FFF]
    return nonflush[rkey]


@lru_cache(maxsize=1)
def board_sums() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Additive keys (mask, rkey, skey) of all C(52,5) boards, colex order.

    Built once per process (~2s, ~60MB); every matchup enumeration slices
    these by a disjointness test on ``mask``.
    """
    n_boards = 2_598_960
    combos = np.fromiter(
        (c for combo in combinations(range(52), 5) for c in combo),
        dtype=np.int8,
        count=5 * n_boards,
    ).reshape(-1, 5)
    colex = np.lexsort(combos.T)
    combos = combos[colex]
    mask = CARD_MASK[combos].sum(axis=1)
    rkey = CARD_RKEY[combos].sum(axis=1)
    skey = CARD_SKEY[combos].sum(axis=1)
    return mask, rkey, skey
