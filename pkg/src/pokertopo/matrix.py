"""The full 1326x1326 counts matrix: computation, storage, scans.

The matrix job enumerates one representative per suit-symmetry class of
ordered disjoint matchups (93,769 classes out of 1,624,350 matchups, and
only one of each class/swapped-class pair is actually evaluated), then
replicates counts to every class member.  Progress is checkpointed per
class so the multi-hour job survives interruption.

File format (fixed): magic ``PKTP``, format version u16 LE, n=1326 u32 LE,
then n*n records of three little-endian u32 (wins, ties, losses) in
row-major pair-index order.  Diagonal and overlapping-pair entries are
stored as zeros and flagged by wins+ties+losses != 1,712,304.
"""

from __future__ import annotations

import multiprocessing
import struct
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable, TextIO

import numpy as np

from .cards import NUM_HOLE_PAIRS, HolePair, all_suit_permutations
from .equity import BOARDS_PER_MATCHUP, MatchupCount, TieConvention, _counts_by_indices

MAGIC = b"PKTP"
FORMAT_VERSION = 1
CHECKPOINT_MAGIC = b"PKTC"

_HEADER = struct.Struct("<4sHI")
_CHECKPOINT_HEADER = struct.Struct("<4sH")
_CHECKPOINT_RECORD = struct.Struct("<IIII")


class CountsMatrix:
    """Dense (1326, 1326, 3) array of exact matchup counts."""

    def __init__(self, data: np.ndarray) -> None:
        if data.shape != (NUM_HOLE_PAIRS, NUM_HOLE_PAIRS, 3) or data.dtype != np.uint32:
            raise ValueError(f"expected uint32 ({NUM_HOLE_PAIRS},{NUM_HOLE_PAIRS},3), got "
                             f"{data.dtype} {data.shape}")
        self.data = data

    @property
    def n(self) -> int:
        return NUM_HOLE_PAIRS

    def defined(self, a_index: int, b_index: int) -> bool:
        return int(self.data[a_index, b_index].sum()) == BOARDS_PER_MATCHUP

    def counts(self, a: HolePair, b: HolePair) -> MatchupCount:
        i, j = a.pair_index, b.pair_index
        w, t, l = (int(x) for x in self.data[i, j])
        if w + t + l != BOARDS_PER_MATCHUP:
            raise ValueError(f"matchup {a} vs {b} is undefined in the matrix")
        return MatchupCount(w, t, l)

    def save(self, path: str | Path) -> None:
        with open(path, "wb") as fh:
            fh.write(_HEADER.pack(MAGIC, FORMAT_VERSION, NUM_HOLE_PAIRS))
            as_le = self.data.astype("<u4", copy=False)
            fh.write(as_le.tobytes(order="C"))

    @classmethod
    def load(cls, path: str | Path) -> "CountsMatrix":
        with open(path, "rb") as fh:
            header = fh.read(_HEADER.size)
            if len(header) != _HEADER.size:
                raise ValueError(f"{path}: truncated header")
            magic, version, n = _HEADER.unpack(header)
            if magic != MAGIC:
                raise ValueError(f"{path}: bad magic {magic!r}")
            if version != FORMAT_VERSION:
                raise ValueError(f"{path}: unsupported format version {version}")
            if n != NUM_HOLE_PAIRS:
                raise ValueError(f"{path}: unexpected n={n}")
            raw = fh.read()
        expected = NUM_HOLE_PAIRS * NUM_HOLE_PAIRS * 3 * 4
        if len(raw) != expected:
            raise ValueError(f"{path}: expected {expected} data bytes, got {len(raw)}")
        data = np.frombuffer(raw, dtype="<u4").reshape(NUM_HOLE_PAIRS, NUM_HOLE_PAIRS, 3)
        return cls(data.astype(np.uint32))

    def to_csv(self, out: TextIO) -> None:
        """Defined entries as ``a_index,b_index,a_text,b_text,wins,ties,losses``."""
        texts = [str(HolePair.from_index(i)) for i in range(NUM_HOLE_PAIRS)]
        out.write("a_index,b_index,a_text,b_text,wins,ties,losses\n")
        totals = self.data.sum(axis=2, dtype=np.uint64)
        for i in range(NUM_HOLE_PAIRS):
            row = self.data[i]
            for j in np.nonzero(totals[i] == BOARDS_PER_MATCHUP)[0]:
                w, t, l = row[j]
                out.write(f"{i},{j},{texts[i]},{texts[j]},{w},{t},{l}\n")


@lru_cache(maxsize=1)
def _perm_card_table() -> np.ndarray:
    """(24, 52) card-index remap per suit permutation, in permutation order."""
    perms = all_suit_permutations()
    return np.array(
        [[4 * (c // 4) + sigma.mapping[c % 4] for c in range(52)] for sigma in perms],
        dtype=np.int64,
    )


@lru_cache(maxsize=1)
def _matchup_arrays() -> tuple[np.ndarray, ...]:
    """Card indices (a_lo, a_hi, b_lo, b_hi) of all ordered disjoint matchups."""
    pairs = np.array(
        [(HolePair.from_index(i).lo.index, HolePair.from_index(i).hi.index)
         for i in range(NUM_HOLE_PAIRS)],
        dtype=np.int64,
    )
    ai, bi = np.meshgrid(np.arange(NUM_HOLE_PAIRS), np.arange(NUM_HOLE_PAIRS), indexing="ij")
    ai, bi = ai.ravel(), bi.ravel()
    a_lo, a_hi = pairs[ai, 0], pairs[ai, 1]
    b_lo, b_hi = pairs[bi, 0], pairs[bi, 1]
    disjoint = (
        (a_lo != b_lo) & (a_lo != b_hi) & (a_hi != b_lo) & (a_hi != b_hi)
    )
    return (a_lo[disjoint], a_hi[disjoint], b_lo[disjoint], b_hi[disjoint],
            ai[disjoint], bi[disjoint])


def _canonical_keys(a_lo: np.ndarray, a_hi: np.ndarray,
                    b_lo: np.ndarray, b_hi: np.ndarray) -> np.ndarray:
    """Packed canonical key per matchup: min over the 24 suit permutations."""
    table = _perm_card_table()
    best: np.ndarray | None = None
    for remap in table:
        al, ah = remap[a_lo], remap[a_hi]
        bl, bh = remap[b_lo], remap[b_hi]
        al, ah = np.minimum(al, ah), np.maximum(al, ah)
        bl, bh = np.minimum(bl, bh), np.maximum(bl, bh)
        key = ((al * 52 + ah) * 52 + bl) * 52 + bh
        best = key if best is None else np.minimum(best, key)
    assert best is not None
    return best


def _decode_key(key: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    b_hi = key % 52
    key = key // 52
    b_lo = key % 52
    key = key // 52
    a_hi = key % 52
    a_lo = key // 52
    return a_lo, a_hi, b_lo, b_hi


def canonical_class_keys() -> np.ndarray:
    """Sorted canonical keys of all suit-symmetry matchup classes."""
    a_lo, a_hi, b_lo, b_hi, _, _ = _matchup_arrays()
    return np.unique(_canonical_keys(a_lo, a_hi, b_lo, b_hi))


def count_canonical_classes() -> int:
    return int(canonical_class_keys().size)


def _compute_classes(work: list[tuple[int, int]]) -> list[tuple[int, int, int, int]]:
    """Evaluate class representatives; work items are (position, key)."""
    out = []
    for pos, key in work:
        a_lo, a_hi, b_lo, b_hi = (int(v) for v in _decode_key(np.int64(key)))
        w, t, l = _counts_by_indices((a_lo, a_hi), (b_lo, b_hi))
        out.append((pos, w, t, l))
    return out


def _read_checkpoint(path: Path, n_classes: int) -> dict[int, tuple[int, int, int]]:
    done: dict[int, tuple[int, int, int]] = {}
    if not path.exists():
        return done
    raw = path.read_bytes()
    if len(raw) < _CHECKPOINT_HEADER.size:
        return done
    magic, version = _CHECKPOINT_HEADER.unpack_from(raw, 0)
    if magic != CHECKPOINT_MAGIC or version != FORMAT_VERSION:
        raise ValueError(f"{path}: not a matrix checkpoint file")
    offset = _CHECKPOINT_HEADER.size
    usable = (len(raw) - offset) // _CHECKPOINT_RECORD.size
    for k in range(usable):
        pos, w, t, l = _CHECKPOINT_RECORD.unpack_from(raw, offset + k * _CHECKPOINT_RECORD.size)
        if pos < n_classes and w + t + l == BOARDS_PER_MATCHUP:
            done[pos] = (w, t, l)
    return done


def full_matrix(
    use_symmetry: bool = True,
    jobs: int = 1,
    checkpoint: str | Path | None = None,
    progress: Callable[[int, int], None] | None = None,
) -> CountsMatrix:
    """Exact counts for every ordered disjoint matchup.

    With ``use_symmetry`` one representative per canonical class is
    enumerated (plus swap-halving: the reversed matchup reuses reversed
    counts); without it every ordered matchup is enumerated directly.  The
    result is identical either way.  Expect hours of runtime even with
    symmetry; pass ``checkpoint`` to make the job resumable.
    """
    a_lo, a_hi, b_lo, b_hi, a_idx, b_idx = _matchup_arrays()
    keys = _canonical_keys(a_lo, a_hi, b_lo, b_hi)
    data = np.zeros((NUM_HOLE_PAIRS, NUM_HOLE_PAIRS, 3), dtype=np.uint32)

    if not use_symmetry:
        total = len(a_idx)
        for k in range(total):
            w, t, l = _counts_by_indices(
                (int(a_lo[k]), int(a_hi[k])), (int(b_lo[k]), int(b_hi[k]))
            )
            data[a_idx[k], b_idx[k]] = (w, t, l)
            if progress is not None and (k + 1) % 100 == 0:
                progress(k + 1, total)
        return CountsMatrix(data)

    classes = np.unique(keys)
    n_classes = len(classes)
    ra_lo, ra_hi, rb_lo, rb_hi = _decode_key(classes)
    swap_keys = _canonical_keys(rb_lo, rb_hi, ra_lo, ra_hi)
    primary = classes <= swap_keys
    work_positions = np.nonzero(primary)[0]

    done: dict[int, tuple[int, int, int]] = {}
    checkpoint_path = Path(checkpoint) if checkpoint is not None else None
    checkpoint_fh = None
    if checkpoint_path is not None:
        done = _read_checkpoint(checkpoint_path, n_classes)
        fresh = not checkpoint_path.exists()
        checkpoint_fh = open(checkpoint_path, "ab")
        if fresh:
            checkpoint_fh.write(_CHECKPOINT_HEADER.pack(CHECKPOINT_MAGIC, FORMAT_VERSION))
            checkpoint_fh.flush()

    todo = [(int(pos), int(classes[pos])) for pos in work_positions if int(pos) not in done]
    total_work = len(work_positions)
    completed = total_work - len(todo)

    def record(results: Iterable[tuple[int, int, int, int]]) -> None:
        nonlocal completed
        for pos, w, t, l in results:
            done[pos] = (w, t, l)
            if checkpoint_fh is not None:
                checkpoint_fh.write(_CHECKPOINT_RECORD.pack(pos, w, t, l))
            completed += 1
        if checkpoint_fh is not None:
            checkpoint_fh.flush()
        if progress is not None:
            progress(completed, total_work)

    try:
        if jobs <= 1:
            chunk = 50
            for start in range(0, len(todo), chunk):
                record(_compute_classes(todo[start : start + chunk]))
        else:
            chunk = 50
            chunks = [todo[start : start + chunk] for start in range(0, len(todo), chunk)]
            with multiprocessing.get_context("spawn").Pool(jobs) as pool:
                for results in pool.imap_unordered(_compute_classes, chunks):
                    record(results)
    finally:
        if checkpoint_fh is not None:
            checkpoint_fh.close()

    class_w = np.zeros(n_classes, dtype=np.uint32)
    class_t = np.zeros(n_classes, dtype=np.uint32)
    class_l = np.zeros(n_classes, dtype=np.uint32)
    for pos, (w, t, l) in done.items():
        class_w[pos], class_t[pos], class_l[pos] = w, t, l
    swap_pos = np.searchsorted(classes, swap_keys)
    secondary = np.nonzero(~primary)[0]
    class_w[secondary] = class_l[swap_pos[secondary]]
    class_t[secondary] = class_t[swap_pos[secondary]]
    class_l[secondary] = class_w[swap_pos[secondary]]

    positions = np.searchsorted(classes, keys)
    data[a_idx, b_idx, 0] = class_w[positions]
    data[a_idx, b_idx, 1] = class_t[positions]
    data[a_idx, b_idx, 2] = class_l[positions]
    return CountsMatrix(data)


def closest_call(
    matrix: CountsMatrix, convention: TieConvention = TieConvention.SPLIT_TIE
) -> tuple[HolePair, HolePair, Fraction]:
    """The defined matchup whose win probability is minimal among those > 1/2."""
    w = matrix.data[:, :, 0].astype(np.int64)
    t = matrix.data[:, :, 1].astype(np.int64)
    l = matrix.data[:, :, 2].astype(np.int64)
    defined = (w + t + l) == BOARDS_PER_MATCHUP
    if convention is TieConvention.SPLIT_TIE:
        score = 2 * w + t  # probability = score / (2 * total)
        threshold = BOARDS_PER_MATCHUP  # score > total  <=>  prob > 1/2
        denominator = 2 * BOARDS_PER_MATCHUP
    else:
        score = w
        threshold = BOARDS_PER_MATCHUP // 2  # w > total/2 (total is even)
        denominator = BOARDS_PER_MATCHUP
    eligible = defined & (score > threshold)
    if not eligible.any():
        raise ValueError("matrix has no matchup won with probability > 1/2")
    masked = np.where(eligible, score, np.iinfo(np.int64).max)
    flat = int(np.argmin(masked))
    i, j = divmod(flat, NUM_HOLE_PAIRS)
    prob = Fraction(int(score[i, j]), denominator)
    return HolePair.from_index(i), HolePair.from_index(j), prob
