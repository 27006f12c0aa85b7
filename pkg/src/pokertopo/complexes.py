"""Tournaments and the order complex of their beats relation.

A subset of vertices is a face when the relation restricted to it is a
total order.  A tournament restricted to pairwise-comparable vertices is
an order exactly when it has no directed 3-cycle, so faces are determined
by their 3-subsets; construction exploits this by growing faces inside
the comparability graph while pruning extensions that close a 3-cycle
with any chosen pair.  Vertex sets are small (at most a few hundred), so
candidate sets live in single integer bitmasks.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Sequence


class Tournament:
    """An antisymmetric "beats" relation with optional edge probabilities."""

    def __init__(
        self,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, str]] = (),
        probabilities: Mapping[tuple[str, str], Fraction] | None = None,
    ) -> None:
        self.vertices: tuple[str, ...] = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        known = set(self.vertices)
        edge_set = set()
        for u, v in edges:
            if u not in known or v not in known:
                raise ValueError(f"edge ({u}, {v}) uses unknown vertices")
            if u == v:
                raise ValueError(f"self-edge at {u}")
            if (v, u) in edge_set:
                raise ValueError(f"both orientations present for {u}, {v}")
            edge_set.add((u, v))
        self.edges: frozenset[tuple[str, str]] = frozenset(edge_set)
        probs = dict(probabilities or {})
        for key in probs:
            if key not in self.edges:
                raise ValueError(f"probability attached to missing edge {key}")
        self.probabilities: dict[tuple[str, str], Fraction] = probs

    def beats(self, u: str, v: str) -> bool:
        return (u, v) in self.edges

    def comparable(self, u: str, v: str) -> bool:
        return (u, v) in self.edges or (v, u) in self.edges

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"Tournament({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def save(self, path: str | Path) -> None:
        """Write one line per edge ``u v [prob]``; isolated vertices as ``u``."""
        touched = {u for u, _ in self.edges} | {v for _, v in self.edges}
        with open(path, "w", encoding="utf-8") as fh:
            for u, v in sorted(self.edges):
                prob = self.probabilities.get((u, v))
                if prob is None:
                    fh.write(f"{u} {v}\n")
                else:
                    fh.write(f"{u} {v} {prob.numerator}/{prob.denominator}\n")
            for v in self.vertices:
                if v not in touched:
                    fh.write(f"{v}\n")

    @classmethod
    def load(cls, path: str | Path) -> "Tournament":
        vertices: list[str] = []
        seen: set[str] = set()
        edges: list[tuple[str, str]] = []
        probs: dict[tuple[str, str], Fraction] = {}

        def add_vertex(label: str) -> None:
            if label not in seen:
                seen.add(label)
                vertices.append(label)

        with open(path, "r", encoding="utf-8") as fh:
            for line_no, raw in enumerate(fh, start=1):
                parts = raw.split("#", 1)[0].split()
                if not parts:
                    continue
                if len(parts) == 1:
                    add_vertex(parts[0])
                elif len(parts) in (2, 3):
                    u, v = parts[0], parts[1]
                    add_vertex(u)
                    add_vertex(v)
                    edges.append((u, v))
                    if len(parts) == 3:
                        probs[(u, v)] = Fraction(parts[2])
                else:
                    raise ValueError(f"{path}:{line_no}: expected 'u v [prob]'")
        return cls(vertices, edges, probs)


class _FlagStructure:
    """Bitmask machinery for enumerating faces of an order complex."""

    def __init__(self, tournament: Tournament) -> None:
        labels = tournament.vertices
        self.index = {v: i for i, v in enumerate(labels)}
        n = len(labels)
        self.n = n
        out = [0] * n
        for u, v in tournament.edges:
            out[self.index[u]] |= 1 << self.index[v]
        self.out = out
        inn = [0] * n
        for i in range(n):
            for j in range(n):
                if (out[j] >> i) & 1:
                    inn[i] |= 1 << j
        self.inn = inn
        self.comp = [out[i] | inn[i] for i in range(n)]
        # pair_ok[i][j]: vertices completing {i, j} to a transitive triple
        self.pair_ok: list[dict[int, int]] = [dict() for _ in range(n)]
        full = (1 << n) - 1
        for i in range(n):
            for j in range(n):
                if not (out[i] >> j) & 1:
                    continue  # only i -> j; symmetric entry filled for both
                cycle = out[j] & inn[i]
                ok = self.comp[i] & self.comp[j] & (full ^ cycle)
                ok &= ~(1 << i) & ~(1 << j)
                self.pair_ok[i][j] = ok
                self.pair_ok[j][i] = ok

    def iter_faces(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """Yield (face, candidate-extension mask) for every nonempty face.

        A face is maximal exactly when its candidate mask is zero.  Each
        face appears once; vertices are added in increasing index order.
        """
        n = self.n
        above = [-1 << (v + 1) for v in range(n)]
        stack: list[tuple[list[int], int]] = []
        for v in range(n - 1, -1, -1):
            stack.append(([v], self.comp[v] & ~(1 << v)))
        pair_ok = self.pair_ok
        while stack:
            face, cand = stack.pop()
            yield tuple(face), cand
            ext = cand & above[face[-1]]
            while ext:
                low = ext & (-ext)
                ext ^= low
                u = low.bit_length() - 1
                new_cand = cand & self.comp[u] & ~low
                row = pair_ok[u]
                for x in face:
                    new_cand &= row[x]
                stack.append((face + [u], new_cand))

    def iter_faces_of_dimension(self, dim: int) -> Iterator[tuple[int, ...]]:
        """Faces of one dimension only, pruning deeper branches."""
        target = dim + 1
        n = self.n
        above = [-1 << (v + 1) for v in range(n)]
        stack: list[tuple[list[int], int]] = []
        for v in range(n - 1, -1, -1):
            stack.append(([v], self.comp[v] & ~(1 << v)))
        pair_ok = self.pair_ok
        while stack:
            face, cand = stack.pop()
            if len(face) == target:
                yield tuple(face)
                continue
            ext = cand & above[face[-1]]
            while ext:
                low = ext & (-ext)
                ext ^= low
                u = low.bit_length() - 1
                new_cand = cand & self.comp[u] & ~low
                row = pair_ok[u]
                for x in face:
                    new_cand &= row[x]
                stack.append((face + [u], new_cand))


class SimplicialComplex:
    """Abstract complex stored by its maximal faces.

    Vertex labels are opaque strings, mapped to dense integers internally.
    Faces built from a tournament keep the flag structure around so that
    face enumeration never expands subsets of maximal faces.
    """

    def __init__(
        self,
        vertices: Iterable[str],
        maximal_faces: Iterable[Iterable[str]],
        _flag: _FlagStructure | None = None,
    ) -> None:
        self.vertices: tuple[str, ...] = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        self._index = {v: i for i, v in enumerate(self.vertices)}
        seen: set[tuple[int, ...]] = set()
        for face in maximal_faces:
            idx = tuple(sorted(self._index[v] for v in face))
            if len(set(idx)) != len(idx):
                raise ValueError(f"repeated vertex in face {tuple(face)}")
            if idx:
                seen.add(idx)
        # drop faces contained in others so the stored family is antichain
        by_size = sorted(seen, key=len, reverse=True)
        kept: list[tuple[int, ...]] = []
        kept_sets: list[frozenset[int]] = []
        for idx in by_size:
            s = frozenset(idx)
            if not any(s <= other for other in kept_sets):
                kept.append(idx)
                kept_sets.append(s)
        covered = set().union(*kept_sets) if kept_sets else set()
        for i, v in enumerate(self.vertices):
            if i not in covered:
                kept.append((i,))
                kept_sets.append(frozenset((i,)))
        self._maximal: tuple[tuple[int, ...], ...] = tuple(sorted(kept))
        self._maximal_sets = tuple(frozenset(f) for f in self._maximal)
        self._flag = _flag
        self._f_vector: tuple[int, ...] | None = None

    @property
    def maximal_faces(self) -> tuple[tuple[str, ...], ...]:
        return tuple(
            tuple(self.vertices[i] for i in face) for face in self._maximal
        )

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self._maximal), default=0) - 1

    def has_face(self, face: Iterable[str]) -> bool:
        """Membership test: a subset of some maximal face (empty set included)."""
        try:
            idx = frozenset(self._index[v] for v in face)
        except KeyError:
            return False
        return any(idx <= m for m in self._maximal_sets)

    def _int_faces_by_dimension(self) -> list[list[tuple[int, ...]]]:
        """All faces as sorted int tuples, grouped (and sorted) per dimension."""
        if self._flag is not None:
            out: list[list[tuple[int, ...]]] = [[] for _ in range(self.dimension + 1)]
            for face, _cand in self._flag.iter_faces():
                out[len(face) - 1].append(face)
        else:
            from itertools import combinations

            per_dim: list[set[tuple[int, ...]]] = [
                set() for _ in range(self.dimension + 1)
            ]
            for m in self._maximal:
                for size in range(1, len(m) + 1):
                    per_dim[size - 1].update(combinations(m, size))
            out = [list(s) for s in per_dim]
        for level in out:
            level.sort()
        return out

    def faces_by_dimension(self) -> list[list[tuple[str, ...]]]:
        """All faces as label tuples per dimension, lexicographically sorted."""
        return [
            [tuple(self.vertices[i] for i in face) for face in level]
            for level in self._int_faces_by_dimension()
        ]

    def f_vector(self) -> tuple[int, ...]:
        """Face counts per dimension 0..dim (the empty face is excluded)."""
        if self._f_vector is None:
            if self._flag is not None:
                counts = [0] * (self.dimension + 1)
                for face, _cand in self._flag.iter_faces():
                    counts[len(face) - 1] += 1
                self._f_vector = tuple(counts)
            else:
                self._f_vector = tuple(
                    len(level) for level in self._int_faces_by_dimension()
                )
        return self._f_vector

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * count for d, count in enumerate(self.f_vector()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        if set(self.vertices) != set(other.vertices):
            return False
        mine = {frozenset(face) for face in self.maximal_faces}
        theirs = {frozenset(face) for face in other.maximal_faces}
        return mine == theirs

    def __hash__(self) -> int:
        return hash(frozenset(frozenset(f) for f in self.maximal_faces))

    def __repr__(self) -> str:
        return (
            f"SimplicialComplex({len(self.vertices)} vertices, "
            f"{len(self._maximal)} maximal faces, dim {self.dimension})"
        )

    def save(self, path: str | Path) -> None:
        """One maximal face per line, space-separated vertex labels."""
        with open(path, "w", encoding="utf-8") as fh:
            for face in sorted(self.maximal_faces):
                fh.write(" ".join(face) + "\n")

    @classmethod
    def load(cls, path: str | Path) -> "SimplicialComplex":
        faces: list[tuple[str, ...]] = []
        labels: set[str] = set()
        with open(path, "r", encoding="utf-8") as fh:
            for raw in fh:
                parts = raw.split("#", 1)[0].split()
                if parts:
                    faces.append(tuple(parts))
                    labels.update(parts)
        return cls(sorted(labels), faces)


def is_simplex(tournament: Tournament, subset: Iterable[str]) -> bool:
    """True iff the relation restricted to ``subset`` is a total order.

    Equivalent (and asserted in tests) to every 3-subset being a simplex:
    all pairs comparable with no directed 3-cycle.
    """
    labels = list(subset)
    for v in labels:
        if v not in tournament.vertices:
            raise ValueError(f"unknown vertex {v!r}")
    if len(set(labels)) != len(labels):
        raise ValueError("repeated vertex in subset")
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            if not tournament.comparable(labels[i], labels[j]):
                return False
    return _no_three_cycle(tournament, labels)


def _no_three_cycle(tournament: Tournament, labels: Sequence[str]) -> bool:
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            for k in range(j + 1, len(labels)):
                trio = (labels[i], labels[j], labels[k])
                forward = (
                    tournament.beats(trio[0], trio[1])
                    and tournament.beats(trio[1], trio[2])
                    and tournament.beats(trio[2], trio[0])
                )
                backward = (
                    tournament.beats(trio[1], trio[0])
                    and tournament.beats(trio[2], trio[1])
                    and tournament.beats(trio[0], trio[2])
                )
                if forward or backward:
                    return False
    return True


def order_complex(tournament: Tournament) -> SimplicialComplex:
    """The complex whose faces are the totally ordered vertex subsets."""
    flag = _FlagStructure(tournament)
    maximal: list[tuple[str, ...]] = []
    for face, cand in flag.iter_faces():
        if cand == 0:
            maximal.append(tuple(tournament.vertices[i] for i in face))
    return SimplicialComplex(tournament.vertices, maximal, _flag=flag)


def join(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    """Join of two complexes on disjoint vertex sets.

    Faces are all unions of a face of each; maximal faces are the pairwise
    unions of maximal faces.
    """
    shared = set(k1.vertices) & set(k2.vertices)
    if shared:
        raise ValueError(f"vertex sets overlap: {sorted(shared)}")
    faces = [
        tuple(f1) + tuple(f2)
        for f1 in k1.maximal_faces
        for f2 in k2.maximal_faces
    ]
    return SimplicialComplex(k1.vertices + k2.vertices, faces)


def join_many(complexes: Sequence[SimplicialComplex]) -> SimplicialComplex:
    if not complexes:
        raise ValueError("need at least one complex")
    result = complexes[0]
    for other in complexes[1:]:
        result = join(result, other)
    return result


def f_vector(complex_: SimplicialComplex) -> tuple[int, ...]:
    """Module-level alias of :meth:`SimplicialComplex.f_vector`."""
    return complex_.f_vector()
