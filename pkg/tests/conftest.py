from __future__ import annotations

import pytest

from pokertopo import (
    HolePair,
    LiveCounts,
    TieConvention,
    order_complex,
    relation_at,
)
from pokertopo.reference import EIGHT_HANDS


@pytest.fixture(scope="session")
def live_counts() -> LiveCounts:
    """One shared memoized counts provider; matchup enumerations are slow."""
    return LiveCounts()


@pytest.fixture(scope="session")
def eight_hands() -> list[HolePair]:
    return [HolePair.from_text(text) for text in EIGHT_HANDS]


@pytest.fixture(scope="session")
def eight_hand_tournament(live_counts, eight_hands):
    return relation_at(live_counts, eight_hands, TieConvention.SPLIT_TIE)


@pytest.fixture(scope="session")
def eight_hand_complex(eight_hand_tournament):
    return order_complex(eight_hand_tournament)


@pytest.fixture(scope="session")
def triangle_hands() -> list[HolePair]:
    return [HolePair.from_text(text) for text in ("Ac2c", "3c5c", "2d2h")]
