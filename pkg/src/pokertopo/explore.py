"""Randomized search for hand subsets with interesting homology.

Each trial orders the 52 cards by value (the card index order), keeps
each card independently with probability p, and pairs consecutive kept
cards, discarding a trailing odd card; the resulting hole pairs are
disjoint by construction.  Trial streams come from SplitMix64 so runs are
reproducible bit-for-bit from (seed, trial) across implementations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .cards import Card, HolePair
from .complexes import order_complex
from .equity import CountsProvider, TieConvention, relation_at
from .homology import HomologyReport, homology

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """SplitMix64 generator (Steele-Lea-Flood), fixed constants.

    state += 0x9E3779B97F4A7C15;
    z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
    z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31.
    """

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_unit(self) -> float:
        """Uniform in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53


def sphere_like(min_degree: int = 2) -> Callable[[HomologyReport], bool]:
    """Predicate: reduced homology is a single Z in one degree >= min_degree."""

    def predicate(report: HomologyReport) -> bool:
        nonzero = [
            k
            for k in range(len(report.betti))
            if report.betti[k] or (k < len(report.torsion) and report.torsion[k])
        ]
        if len(nonzero) != 1:
            return False
        k = nonzero[0]
        return k >= min_degree and report.betti[k] == 1 and not report.torsion[k]

    return predicate


@dataclass(frozen=True)
class SearchConfig:
    """Deterministic search parameters; equal configs give equal trial streams."""

    keep_probability: float = 0.5
    trials: int = 1000
    seed: int = 0
    target: Callable[[HomologyReport], bool] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not 0.0 < self.keep_probability < 1.0:
            raise ValueError(f"keep probability must be in (0,1), got {self.keep_probability}")
        if self.trials < 0:
            raise ValueError("trials must be nonnegative")

    @property
    def predicate(self) -> Callable[[HomologyReport], bool]:
        return self.target if self.target is not None else sphere_like(2)


def sample_hand_set(config: SearchConfig, trial: int) -> list[HolePair]:
    """The hand set of one trial; a pure function of (seed, trial, p)."""
    rng = SplitMix64((config.seed + trial * _GAMMA) & _MASK64)
    kept = [c for c in range(52) if rng.next_unit() < config.keep_probability]
    if len(kept) % 2:
        kept.pop()
    return [
        HolePair(Card.from_index(kept[i]), Card.from_index(kept[i + 1]))
        for i in range(0, len(kept), 2)
    ]


@dataclass(frozen=True)
class SearchHit:
    """A reported hand set; trial is negative for injected (forced) sets."""

    trial: int
    hands: tuple[HolePair, ...]
    report: HomologyReport


def evaluate_hand_set(
    hands: Sequence[HolePair],
    provider: CountsProvider,
    convention: TieConvention = TieConvention.STRICT_WIN,
) -> HomologyReport:
    """Reduced homology of the order complex of the beats relation on ``hands``."""
    tournament = relation_at(provider, hands, convention)
    return homology(order_complex(tournament), reduced=True)


def search(
    config: SearchConfig,
    provider: CountsProvider,
    convention: TieConvention = TieConvention.STRICT_WIN,
    *,
    forced_sets: Iterable[Sequence[HolePair]] = (),
    start_trial: int = 0,
    on_progress: Callable[[int], None] | None = None,
) -> list[SearchHit]:
    """Run trials [start_trial, config.trials) plus any forced sets.

    Forced sets are evaluated first with trial indices -1, -2, ...; results
    are reproducible and resumable by trial index.
    """
    predicate = config.predicate
    hits: list[SearchHit] = []

    def consider(trial: int, hands: Sequence[HolePair]) -> None:
        if not hands:
            return
        report = evaluate_hand_set(hands, provider, convention)
        if predicate(report):
            hits.append(SearchHit(trial, tuple(hands), report))

    for k, hands in enumerate(forced_sets):
        consider(-1 - k, hands)
    for trial in range(start_trial, config.trials):
        consider(trial, sample_hand_set(config, trial))
        if on_progress is not None:
            on_progress(trial)
    return hits
