from __future__ import annotations

import random
from itertools import combinations

import pytest

from pokertopo import (
    Card,
    HandValue,
    all_suit_permutations,
    rank5,
    rank7,
    rank7_oracle,
)


def cards(text: str) -> list[Card]:
    return [Card.from_text(token) for token in text.split()]


def test_royal_flush_is_maximum():
    royal = rank5(cards("As Ks Qs Js Ts"))
    assert royal.category == 8
    assert royal.tiebreak == (14,)
    lower = rank5(cards("9s Ks Qs Js Ts"))
    assert lower.category == 8
    assert royal > lower


def test_wheel_plays_ace_low():
    wheel = rank5(cards("Ac 2d 3h 4s 5c"))
    assert wheel.category == 4
    assert wheel.tiebreak == (5,)
    six_high = rank5(cards("2c 3d 4h 5s 6c"))
    assert six_high > wheel


def test_steel_wheel():
    value = rank5(cards("Ah 2h 3h 4h 5h"))
    assert value.category == 8
    assert value.tiebreak == (5,)


def test_category_examples():
    assert rank5(cards("Ac Ad Ah As Kc")).category == 7
    assert rank5(cards("Ac Ad Ah Kc Kd")).category == 6
    assert rank5(cards("2c 7c 9c Jc Kc")).category == 5
    assert rank5(cards("2c 2d 5h 5s 9c")).category == 2
    assert rank5(cards("2c 2d 5h 8s 9c")).category == 1
    assert rank5(cards("2c 5d 7h Ts Kc")).category == 0


def test_rank5_rejects_duplicates():
    with pytest.raises(ValueError, match="duplicate"):
        rank5([Card.from_index(0)] * 5)


def test_rank7_quads_with_kicker():
    value = rank7(cards("As Ah Ad Ac Ks Kh 2c"))
    assert value.category == 7
    assert value.tiebreak == (14, 13)


def test_rank7_equals_oracle_on_directed_cases():
    directed = [
        "Ah 2d 3c 4s 5h Kd Kc",
        "Ah 2h 3h 4h 5h Kd Kc",
        "2c 3c 4c 5c 6c 7d 8d",
        "Ah Kh Qh Jh 9h Td Tc",
        "2c 2d 8h 8s 9c 9d Ah",
        "As Ks Qs Js Ts 2c 3c",
        "2c 2d 2h 3c 3d 3h 4s",
        "7c 8c 9c Tc Jc Qd Kd",
    ]
    for text in directed:
        hand = cards(text)
        assert rank7(hand) == rank7_oracle(hand), text


def test_rank7_equals_oracle_on_random_draws():
    rng = random.Random(2024)
    for _ in range(2000):
        hand = [Card.from_index(i) for i in rng.sample(range(52), 7)]
        assert rank7(hand) == rank7_oracle(hand)


def test_rank7_is_max_over_five_card_subsets():
    rng = random.Random(7)
    for _ in range(50):
        hand = [Card.from_index(i) for i in rng.sample(range(52), 7)]
        best = max(rank5(subset) for subset in combinations(hand, 5))
        assert rank7(hand) == best


def test_permutation_invariance():
    rng = random.Random(99)
    for _ in range(50):
        hand = [Card.from_index(i) for i in rng.sample(range(52), 7)]
        shuffled = hand[:]
        rng.shuffle(shuffled)
        assert rank7(hand) == rank7(shuffled)
        assert rank5(hand[:5]) == rank5(list(reversed(hand[:5])))


def test_suit_invariance():
    rng = random.Random(4)
    perms = all_suit_permutations()
    for _ in range(50):
        hand = [Card.from_index(i) for i in rng.sample(range(52), 7)]
        sigma = rng.choice(perms)
        mapped = [sigma.apply_to_card(c) for c in hand]
        assert rank7(hand) == rank7(mapped)
        assert rank5(hand[:5]) == rank5(mapped[:5])


def test_rank7_rejects_wrong_arity_and_duplicates():
    with pytest.raises(ValueError):
        rank7([Card.from_index(i) for i in range(6)])
    with pytest.raises(ValueError, match="duplicate"):
        rank7([Card.from_index(i) for i in (0, 1, 2, 3, 4, 5, 5)])


def test_packed_comparison_refines_category_order():
    ordered_examples = [
        rank5(cards("2c 5d 7h Ts Kc")),   # high card
        rank5(cards("2c 2d 5h 8s 9c")),   # pair
        rank5(cards("2c 2d 5h 5s 9c")),   # two pair
        rank5(cards("2c 2d 2h 8s 9c")),   # trips
        rank5(cards("Ac 2d 3h 4s 5c")),   # straight (wheel)
        rank5(cards("2c 7c 9c Jc Kc")),   # flush
        rank5(cards("2c 2d 2h 9s 9c")),   # full house
        rank5(cards("2c 2d 2h 2s 9c")),   # quads
        rank5(cards("Ah 2h 3h 4h 5h")),   # straight flush
    ]
    packed = [v.packed for v in ordered_examples]
    assert packed == sorted(packed)
    assert [v.category for v in ordered_examples] == list(range(9))


def test_hand_value_round_trip_and_str():
    value = HandValue.from_parts(6, (14, 13))
    assert value.category_name == "full house"
    assert value.tiebreak == (14, 13)
    assert "full house" in str(value)
