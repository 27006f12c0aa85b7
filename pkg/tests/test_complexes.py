from __future__ import annotations

import random
from itertools import combinations

import pytest

from pokertopo import (
    SimplicialComplex,
    Tournament,
    f_vector,
    is_simplex,
    join,
    join_many,
    order_complex,
)


def rps() -> Tournament:
    return Tournament(["R", "P", "S"], [("R", "P"), ("P", "S"), ("S", "R")])


def transitive(labels: str) -> Tournament:
    edges = [(a, b) for i, a in enumerate(labels) for b in labels[i + 1 :]]
    return Tournament(list(labels), edges)


def random_tournament(n: int, rng: random.Random, comparable_prob: float = 0.85) -> Tournament:
    labels = [f"v{i}" for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < comparable_prob:
                edges.append((labels[i], labels[j]) if rng.random() < 0.5 else (labels[j], labels[i]))
    return Tournament(labels, edges)


def test_tournament_validation():
    with pytest.raises(ValueError, match="duplicate"):
        Tournament(["a", "a"])
    with pytest.raises(ValueError, match="unknown"):
        Tournament(["a"], [("a", "b")])
    with pytest.raises(ValueError, match="self-edge"):
        Tournament(["a"], [("a", "a")])
    with pytest.raises(ValueError, match="orientations"):
        Tournament(["a", "b"], [("a", "b"), ("b", "a")])


def test_is_simplex_basics():
    t = rps()
    assert is_simplex(t, [])
    assert is_simplex(t, ["R"])
    assert is_simplex(t, ["R", "P"])
    assert not is_simplex(t, ["R", "P", "S"])
    with pytest.raises(ValueError, match="unknown"):
        is_simplex(t, ["R", "X"])


def test_is_simplex_three_determined():
    """A subset is a face iff every 3-subset is a face (brute force check)."""
    rng = random.Random(42)
    for _ in range(8):
        t = random_tournament(7, rng)
        labels = list(t.vertices)
        for size in range(2, 8):
            for subset in combinations(labels, size):
                by_definition = is_simplex(t, subset)
                by_triples = all(
                    is_simplex(t, triple) for triple in combinations(subset, min(3, size))
                )
                assert by_definition == by_triples, subset


def test_order_complex_matches_brute_force_subsets():
    rng = random.Random(7)
    for _ in range(10):
        t = random_tournament(8, rng, comparable_prob=0.8)
        complex_ = order_complex(t)
        labels = list(t.vertices)
        expected = set()
        for size in range(1, 9):
            for subset in combinations(labels, size):
                if is_simplex(t, subset):
                    expected.add(frozenset(subset))
        actual = set()
        for level in complex_.faces_by_dimension():
            actual.update(frozenset(face) for face in level)
        assert actual == expected


def test_order_complex_rps_is_circle():
    complex_ = order_complex(rps())
    assert complex_.f_vector() == (3, 3)
    assert {frozenset(f) for f in complex_.maximal_faces} == {
        frozenset({"R", "P"}),
        frozenset({"P", "S"}),
        frozenset({"S", "R"}),
    }


def test_order_complex_transitive_is_full_simplex():
    for k in (2, 3, 4, 5):
        labels = "abcdefgh"[:k]
        complex_ = order_complex(transitive(labels))
        assert sum(complex_.f_vector()) == 2**k - 1
        assert complex_.dimension == k - 1
    assert order_complex(transitive("abcd")).f_vector() == (4, 6, 4, 1)


def test_maximal_faces_are_maximal_and_cover():
    rng = random.Random(3)
    for _ in range(5):
        t = random_tournament(8, rng)
        complex_ = order_complex(t)
        maximal = [frozenset(f) for f in complex_.maximal_faces]
        for i, face in enumerate(maximal):
            assert not any(face < other for other in maximal), "stored face not maximal"
        for level in complex_.faces_by_dimension():
            for face in level:
                assert any(frozenset(face) <= m for m in maximal)


def test_has_face():
    complex_ = order_complex(rps())
    assert complex_.has_face([])
    assert complex_.has_face(["R"])
    assert complex_.has_face(["R", "P"])
    assert not complex_.has_face(["R", "P", "S"])
    assert not complex_.has_face(["R", "X"])


def test_join_square_is_circle():
    s0a = SimplicialComplex(["a1", "a2"], [["a1"], ["a2"]])
    s0b = SimplicialComplex(["b1", "b2"], [["b1"], ["b2"]])
    square = join(s0a, s0b)
    assert square.f_vector() == (4, 4)


def test_join_rejects_overlap():
    k = SimplicialComplex(["a"], [["a"]])
    with pytest.raises(ValueError, match="overlap"):
        join(k, k)


def test_join_with_point_is_cone():
    s0 = SimplicialComplex(["a1", "a2"], [["a1"], ["a2"]])
    point = SimplicialComplex(["p"], [["p"]])
    cone = join(s0, point)
    assert {frozenset(f) for f in cone.maximal_faces} == {
        frozenset({"a1", "p"}),
        frozenset({"a2", "p"}),
    }


def test_join_associative_and_commutative():
    rng = random.Random(5)
    parts = []
    for i in range(3):
        t = random_tournament(4, rng)
        relabeled = Tournament(
            [f"{i}{v}" for v in t.vertices],
            [(f"{i}{u}", f"{i}{v}") for u, v in t.edges],
        )
        parts.append(order_complex(relabeled))
    a, b, c = parts
    assert join(a, join(b, c)) == join(join(a, b), c)
    assert join(a, b) == join(b, a)
    assert join_many([a, b, c]) == join(join(a, b), c)


def test_f_vector_alias_and_euler():
    complex_ = order_complex(rps())
    assert f_vector(complex_) == (3, 3)
    assert complex_.euler_characteristic() == 0


def test_complex_save_load_round_trip(tmp_path):
    complex_ = order_complex(random_tournament(7, random.Random(9)))
    path = tmp_path / "test.cplx"
    complex_.save(path)
    loaded = SimplicialComplex.load(path)
    assert loaded == complex_
    assert loaded.f_vector() == complex_.f_vector()


def test_tournament_save_load_round_trip(tmp_path):
    from fractions import Fraction

    t = Tournament(
        ["a", "b", "c", "isolated"],
        [("a", "b"), ("b", "c")],
        {("a", "b"): Fraction(3, 5)},
    )
    path = tmp_path / "test.rel"
    t.save(path)
    loaded = Tournament.load(path)
    assert set(loaded.vertices) == set(t.vertices)
    assert loaded.edges == t.edges
    assert loaded.probabilities == t.probabilities


def test_singletons_always_faces():
    t = Tournament(["a", "b", "c"], [("a", "b")])  # c isolated
    complex_ = order_complex(t)
    assert complex_.has_face(["c"])
    assert complex_.f_vector() == (3, 1)
