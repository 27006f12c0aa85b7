from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest

from pokertopo import (
    BinaryWord,
    correlation,
    first_occurrence_probability,
    markov_first_occurrence_probability,
    penney_homology,
    penney_tournament,
)
from pokertopo.penney import all_words
from pokertopo.reference import PENNEY3_CYCLE, PENNEY_REDUCED_BETTI


def test_binary_word_validation():
    assert BinaryWord("0101").bits == "0101"
    with pytest.raises(ValueError):
        BinaryWord("")
    with pytest.raises(ValueError):
        BinaryWord("012")


def test_correlation_examples():
    assert correlation("000", "000") == 7  # 1 + 2 + 4
    assert correlation("011", "110") == 3  # overlaps of length 1 and 2
    assert correlation("110", "011") == 1
    for word in ("0110", "1010", "0001"):
        assert correlation(word, word) >= 2 ** (len(word) - 1)
    with pytest.raises(ValueError, match="length"):
        correlation("01", "011")


def test_known_seven_eighths():
    assert first_occurrence_probability("100", "000") == Fraction(7, 8)
    assert markov_first_occurrence_probability("100", "000") == Fraction(7, 8)


def test_formula_agrees_with_markov_oracle_exhaustively():
    for n in (2, 3, 4):
        words = [w.bits for w in all_words(n)]
        for a, b in combinations(words, 2):
            assert first_occurrence_probability(a, b) == markov_first_occurrence_probability(a, b)


def test_formula_agrees_with_markov_oracle_sampled():
    rng = random.Random(6)
    for n in (5, 6):
        words = [w.bits for w in all_words(n)]
        for _ in range(100):
            a, b = rng.sample(words, 2)
            assert first_occurrence_probability(a, b) == markov_first_occurrence_probability(a, b)


def test_probability_conservation():
    rng = random.Random(60)
    for _ in range(200):
        n = rng.randint(2, 6)
        words = [w.bits for w in all_words(n)]
        a, b = rng.sample(words, 2)
        assert first_occurrence_probability(a, b) + first_occurrence_probability(b, a) == 1


def test_complement_symmetry():
    rng = random.Random(61)
    for _ in range(100):
        n = rng.randint(2, 6)
        words = [w.bits for w in all_words(n)]
        a, b = rng.sample(words, 2)
        ca = BinaryWord(a).complement().bits
        cb = BinaryWord(b).complement().bits
        assert first_occurrence_probability(a, b) == first_occurrence_probability(ca, cb)


def test_identical_words_rejected():
    with pytest.raises(ValueError, match="differ"):
        first_occurrence_probability("010", "010")
    with pytest.raises(ValueError, match="differ"):
        markov_first_occurrence_probability("010", "010")


def test_n1_has_no_edges():
    tournament = penney_tournament(1)
    assert len(tournament.vertices) == 2
    assert not tournament.edges


def test_n3_contains_the_classic_cycle():
    tournament = penney_tournament(3)
    cycle = PENNEY3_CYCLE
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        assert tournament.beats(a, b)
        prob = tournament.probabilities[(a, b)]
        assert prob > Fraction(1, 2)


def test_tournament_antisymmetry():
    for n in (2, 3, 4):
        tournament = penney_tournament(n)
        for u, v in tournament.edges:
            assert (v, u) not in tournament.edges
            assert u != v


def test_word_and_complement_are_incomparable():
    # complementing both words preserves the odds, so a word vs its
    # complement is an exact coin flip and never an edge
    for n in (2, 3, 4, 5):
        tournament = penney_tournament(n)
        for word in tournament.vertices:
            comp = BinaryWord(word).complement().bits
            assert not tournament.beats(word, comp)
            assert not tournament.beats(comp, word)


def test_penney_homology_3():
    report = penney_homology(3)
    assert report.betti == PENNEY_REDUCED_BETTI[3]
    assert not any(report.torsion)


def test_penney_homology_4_golden():
    report = penney_homology(4)
    assert report.betti == PENNEY_REDUCED_BETTI[4]
    assert not any(report.torsion)


def test_penney_homology_5_golden():
    report = penney_homology(5)
    assert report.betti == PENNEY_REDUCED_BETTI[5]
    assert not any(report.torsion)


def test_invalid_length():
    with pytest.raises(ValueError):
        all_words(0)
