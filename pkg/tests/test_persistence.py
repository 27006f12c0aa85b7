from __future__ import annotations

from fractions import Fraction

import pytest

from pokertopo import (
    SENTINEL,
    HolePair,
    SimplicialComplex,
    TieConvention,
    Tournament,
    betti_numbers_mod2,
    filtration_from_matrix,
    filtration_from_tournament,
    persistence,
)

SPLIT = TieConvention.SPLIT_TIE


def triangle_complex(labels=("R", "P", "S")) -> SimplicialComplex:
    a, b, c = labels
    return SimplicialComplex(labels, [[a, b], [b, c], [c, a]])


def test_constant_filtration_matches_single_complex():
    complex_ = triangle_complex()
    diagram = persistence([(Fraction(3, 4), complex_), (Fraction(3, 5), complex_)])
    alive = diagram.alive_counts(Fraction(3, 4))
    assert alive == {0: 1, 1: 1}
    assert all(p.death is None for p in diagram.points)
    assert all(p.birth == Fraction(3, 4) for p in diagram.points)


def test_thresholds_must_decrease_and_stay_in_range():
    complex_ = triangle_complex()
    with pytest.raises(ValueError, match="strictly decrease"):
        persistence([(Fraction(3, 5), complex_), (Fraction(3, 4), complex_)])
    with pytest.raises(ValueError, match="outside"):
        persistence([(Fraction(1, 4), complex_)])
    with pytest.raises(ValueError, match="outside"):
        persistence([(Fraction(5, 4), complex_)])


def test_non_nested_filtration_rejected_with_violating_face():
    early = SimplicialComplex(["a", "b"], [["a", "b"]])
    late = SimplicialComplex(["a", "b"], [["a"], ["b"]])  # edge disappears
    with pytest.raises(ValueError, match=r"\('a', 'b'\)"):
        persistence([(Fraction(3, 4), early), (Fraction(3, 5), late)])


def test_edge_birth_and_death_pairing():
    # vertices first, then one edge: the second H0 class dies when it lands
    stage1 = SimplicialComplex(["a", "b"], [["a"], ["b"]])
    stage2 = SimplicialComplex(["a", "b"], [["a", "b"]])
    diagram = persistence([(Fraction(9, 10), stage1), (Fraction(6, 10), stage2)])
    zero = diagram.points_of_dimension(0)
    assert len(zero) == 2
    survivor, killed = sorted(zero, key=lambda p: p.death_or_sentinel)
    assert survivor.death is None
    assert killed.death == Fraction(6, 10)
    assert killed.birth == Fraction(9, 10)
    assert diagram.alive_counts(Fraction(9, 10)) == {0: 2}
    assert diagram.alive_counts(Fraction(6, 10)) == {0: 1}


def test_cycle_birth_in_tournament_filtration():
    probabilities = {
        ("R", "P"): Fraction(62, 100),
        ("P", "S"): Fraction(59, 100),
        ("S", "R"): Fraction(51, 100),
    }
    tournament = Tournament(["R", "P", "S"], probabilities.keys(), probabilities)
    filtration = filtration_from_tournament(tournament)
    thresholds = [p for p, _ in filtration]
    assert thresholds == [
        Fraction(62, 100), Fraction(59, 100), Fraction(51, 100), SENTINEL
    ]
    diagram = persistence(filtration)
    one = diagram.points_of_dimension(1)
    assert len(one) == 1
    assert one[0].birth == Fraction(51, 100)  # the weakest edge closes the cycle
    assert one[0].death is None
    for p, complex_ in filtration:
        direct = {d: b for d, b in enumerate(betti_numbers_mod2(complex_)) if b}
        assert diagram.alive_counts(p) == direct


def test_filtration_from_matrix_incomparable_pair(live_counts):
    hands = [HolePair.from_text("AcAd"), HolePair.from_text("AhAs")]
    filtration = filtration_from_matrix(live_counts, hands, SPLIT)
    assert len(filtration) == 1
    threshold, complex_ = filtration[0]
    assert threshold == SENTINEL
    assert complex_.f_vector() == (2,)
    diagram = persistence(filtration)
    assert diagram.alive_counts(SENTINEL) == {0: 2}


def test_filtration_from_matrix_triangle(live_counts, triangle_hands):
    filtration = filtration_from_matrix(live_counts, triangle_hands, SPLIT)
    # three distinct probabilities plus the sentinel stage
    assert len(filtration) == 4
    thresholds = [p for p, _ in filtration]
    assert thresholds == sorted(thresholds, reverse=True)
    assert thresholds[-1] == SENTINEL
    # nested: every earlier face appears later
    for (p_hi, k_hi), (p_lo, k_lo) in zip(filtration, filtration[1:]):
        for face in k_hi.maximal_faces:
            assert k_lo.has_face(face)
    # the last two stages coincide (sentinel adds nothing once edges exist)
    assert filtration[-1][1] == filtration[-2][1]
    diagram = persistence(filtration)
    one = diagram.points_of_dimension(1)
    assert len(one) == 1
    assert one[0].birth == min(
        p for p, _ in filtration[:-1]
    )  # cycle closes at the weakest edge
    assert one[0].death is None


def test_alive_point_semantics():
    from pokertopo.persistence import PersistencePoint

    point = PersistencePoint(1, Fraction(3, 4), Fraction(3, 5))
    assert point.alive_at(Fraction(3, 4))
    assert point.alive_at(Fraction(7, 10))
    assert not point.alive_at(Fraction(3, 5))  # dead once the killer is present
    assert not point.alive_at(Fraction(4, 5))  # not yet born
    alive = PersistencePoint(0, Fraction(3, 4), None)
    assert alive.alive_at(SENTINEL)
    assert alive.death_or_sentinel == SENTINEL
