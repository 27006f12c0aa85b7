"""Persistent homology over the equity-threshold filtration.

The filtration parameter is a winning-probability threshold p descending
from 1 toward 1/2: complexes grow as p drops.  Reduction follows the
standard boundary-column algorithm over the 2-element field, with faces
ordered by (birth threshold descending, dimension, lexicographic face).
Classes alive at the end carry the 1/2 sentinel as their death value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cards import HolePair
from .complexes import SimplicialComplex, Tournament, order_complex

SENTINEL = Fraction(1, 2)

Filtration = list[tuple[Fraction, SimplicialComplex]]


@dataclass(frozen=True, slots=True)
class PersistencePoint:
    """A homology class: born at ``birth``, dead at ``death`` (None = alive)."""

    dimension: int
    birth: Fraction
    death: Fraction | None

    @property
    def death_or_sentinel(self) -> Fraction:
        return SENTINEL if self.death is None else self.death

    def alive_at(self, p: Fraction) -> bool:
        if self.birth < p:
            return False
        return self.death is None or self.death < p


@dataclass(frozen=True)
class PersistenceDiagram:
    points: tuple[PersistencePoint, ...]

    def alive_counts(self, p: Fraction | float) -> dict[int, int]:
        """Number of alive classes per dimension at threshold ``p``."""
        q = Fraction(p)
        counts: dict[int, int] = {}
        for point in self.points:
            if point.alive_at(q):
                counts[point.dimension] = counts.get(point.dimension, 0) + 1
        return counts

    def points_of_dimension(self, dimension: int) -> tuple[PersistencePoint, ...]:
        return tuple(p for p in self.points if p.dimension == dimension)


def _check_nested(filtration: Sequence[tuple[Fraction, SimplicialComplex]]) -> None:
    previous_p: Fraction | None = None
    for p, _complex in filtration:
        q = Fraction(p)
        if not SENTINEL <= q <= 1:
            raise ValueError(f"threshold {p} outside [1/2, 1]")
        if previous_p is not None and q >= previous_p:
            raise ValueError(f"thresholds must strictly decrease, got {p} after {previous_p}")
        previous_p = q
    for (p_hi, k_hi), (p_lo, k_lo) in zip(filtration, filtration[1:]):
        for face in k_hi.maximal_faces:
            if not k_lo.has_face(face):
                raise ValueError(
                    f"filtration is not nested: face {face} of stage {p_hi} "
                    f"is missing at stage {p_lo}"
                )


def persistence(filtration: Sequence[tuple[Fraction, SimplicialComplex]]) -> PersistenceDiagram:
    """Diagram of (dimension, birth, death) classes of a nested filtration."""
    if not filtration:
        return PersistenceDiagram(())
    _check_nested(filtration)

    birth: dict[tuple[str, ...], Fraction] = {}
    for p, complex_ in filtration:
        q = Fraction(p)
        for level in complex_.faces_by_dimension():
            for face in level:
                if face not in birth:
                    birth[face] = q

    # filtration order: birth stage first (descending p), then dimension,
    # then lexicographic; facets always precede their cofacets.
    ordered = sorted(birth, key=lambda f: (-birth[f], len(f), f))
    position = {face: i for i, face in enumerate(ordered)}

    columns: list[int] = []
    for face in ordered:
        mask = 0
        if len(face) > 1:
            for pos in range(len(face)):
                sub = face[:pos] + face[pos + 1 :]
                mask |= 1 << position[sub]
        columns.append(mask)

    low_owner: dict[int, int] = {}
    creators: set[int] = set()
    points: list[PersistencePoint] = []
    for j, column in enumerate(columns):
        while column:
            low = column.bit_length() - 1
            other = low_owner.get(low)
            if other is None:
                break
            column ^= columns[other]
        columns[j] = column
        if column == 0:
            creators.add(j)
        else:
            low = column.bit_length() - 1
            low_owner[low] = j
            creators.discard(low)
            born = birth[ordered[low]]
            died = birth[ordered[j]]
            if born > died:
                points.append(PersistencePoint(len(ordered[low]) - 1, born, died))
    for j in creators:
        face = ordered[j]
        points.append(PersistencePoint(len(face) - 1, birth[face], None))
    points.sort(key=lambda pt: (pt.dimension, -pt.birth, pt.death_or_sentinel))
    return PersistenceDiagram(tuple(points))


def filtration_from_matrix(
    provider,
    vertices: Sequence[HolePair],
    convention,
) -> Filtration:
    """Threshold filtration of the beats relation on ``vertices``.

    Stages sit at the distinct exact win probabilities above 1/2 in
    decreasing order; a final stage at the 1/2 sentinel holds the strict
    relation (the limit p -> 1/2 from above), which adds faces only when
    no positive threshold exists.
    """
    from .equity import distinct_win_probabilities, relation_at

    thresholds = distinct_win_probabilities(provider, vertices, convention)
    stages: Filtration = []
    for p in thresholds:
        stages.append((p, order_complex(relation_at(provider, vertices, convention, p))))
    stages.append(
        (SENTINEL, order_complex(relation_at(provider, vertices, convention, SENTINEL)))
    )
    return stages


def filtration_from_tournament(tournament: Tournament) -> Filtration:
    """Same construction from an explicit tournament with edge probabilities."""
    probs = sorted({p for p in tournament.probabilities.values() if p > SENTINEL}, reverse=True)
    stages: Filtration = []
    for p in probs + [SENTINEL]:
        edges = []
        edge_probs = {}
        for (u, v), prob in tournament.probabilities.items():
            keep = prob >= p if p > SENTINEL else prob > SENTINEL
            if keep:
                edges.append((u, v))
                edge_probs[(u, v)] = prob
        sub = Tournament(tournament.vertices, edges, edge_probs)
        stages.append((p, order_complex(sub)))
    return stages
