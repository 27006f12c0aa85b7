"""Integer simplicial homology via Smith normal form.

Boundary matrices are kept sparse (dict-of-rows) and reduced by unimodular
row/column eliminations on entries of absolute value 1, picked by a lazy
Markowitz heap so fill-in stays small; whatever survives without unit
entries goes through a classical dense Smith reduction over arbitrary-
precision integers.  Betti numbers follow from the rank formula
``betti_k = f_k - rank d_k - rank d_{k+1}`` and torsion from the invariant
factors of ``d_{k+1}``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .complexes import SimplicialComplex

SparseRows = dict[int, dict[int, int]]


@dataclass(frozen=True)
class BoundaryMatrix:
    """Boundary map from d-faces (columns) to (d-1)-faces (rows).

    Entries are +/-1 with signs from position parity in the sorted face;
    faces are listed lexicographically by vertex label tuple.
    """

    dimension: int
    row_faces: tuple[tuple[str, ...], ...]
    col_faces: tuple[tuple[str, ...], ...]
    entries: dict[tuple[int, int], int] = field(repr=False)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.row_faces), len(self.col_faces))

    def to_dense(self) -> list[list[int]]:
        rows, cols = self.shape
        dense = [[0] * cols for _ in range(rows)]
        for (i, j), v in self.entries.items():
            dense[i][j] = v
        return dense

    def compose_is_zero(self, next_matrix: "BoundaryMatrix") -> bool:
        """Check that self @ next_matrix vanishes (the chain condition)."""
        by_col: dict[int, list[tuple[int, int]]] = {}
        for (i, j), v in self.entries.items():
            by_col.setdefault(j, []).append((i, v))
        for col in range(len(next_matrix.col_faces)):
            acc: dict[int, int] = {}
            for (mid, c2), v2 in next_matrix.entries.items():
                if c2 != col:
                    continue
                for i, v1 in by_col.get(mid, ()):
                    acc[i] = acc.get(i, 0) + v1 * v2
            if any(acc.values()):
                return False
        return True


def _sparse_boundary(
    lower_index: dict[tuple[int, ...], int],
    upper_faces: Sequence[tuple[int, ...]],
) -> SparseRows:
    rows: SparseRows = {}
    for j, face in enumerate(upper_faces):
        for pos in range(len(face)):
            sub = face[:pos] + face[pos + 1 :]
            i = lower_index[sub]
            rows.setdefault(i, {})[j] = 1 if pos % 2 == 0 else -1
    return rows


def boundary_matrices(complex_: SimplicialComplex) -> list[BoundaryMatrix]:
    """Boundary matrices for d = 1..dim of the complex."""
    levels = complex_._int_faces_by_dimension()
    labels = complex_.vertices

    def named(face: tuple[int, ...]) -> tuple[str, ...]:
        return tuple(labels[i] for i in face)

    out = []
    for d in range(1, len(levels)):
        lower = levels[d - 1]
        index = {face: i for i, face in enumerate(lower)}
        entries: dict[tuple[int, int], int] = {}
        for j, face in enumerate(levels[d]):
            for pos in range(len(face)):
                sub = face[:pos] + face[pos + 1 :]
                entries[(index[sub], j)] = 1 if pos % 2 == 0 else -1
        out.append(
            BoundaryMatrix(
                dimension=d,
                row_faces=tuple(named(f) for f in lower),
                col_faces=tuple(named(f) for f in levels[d]),
                entries=entries,
            )
        )
    return out


@dataclass(frozen=True)
class SmithNormalForm:
    """Rank and invariant factors d1 | d2 | ... of an integer matrix."""

    rank: int
    factors: tuple[int, ...]

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(f for f in self.factors if f > 1)


def _eliminate_units(rows: SparseRows) -> tuple[int, SparseRows]:
    """Destructively eliminate +/-1 pivots; returns (count, residual rows).

    Pivots are chosen by (row nnz - 1) * (col nnz - 1) with a lazy heap, so
    singleton rows/columns peel off for free before any fill happens.  Every
    step is a unimodular row/column operation, so the invariant factors of
    the input are the eliminated 1s plus those of the residual.
    """
    cols: dict[int, dict[int, int]] = {}
    for r, row in rows.items():
        for c, v in row.items():
            cols.setdefault(c, {})[r] = v
    heap: list[tuple[int, int, int]] = []
    for r, row in rows.items():
        rl = len(row) - 1
        for c, v in row.items():
            if v == 1 or v == -1:
                heap.append((rl * (len(cols[c]) - 1), r, c))
    heapq.heapify(heap)
    pivots = 0
    while heap:
        cost, pr, pc = heapq.heappop(heap)
        row = rows.get(pr)
        if row is None:
            continue
        pivot = row.get(pc)
        if pivot is None or (pivot != 1 and pivot != -1):
            continue
        current = (len(row) - 1) * (len(cols[pc]) - 1)
        if current > cost:
            heapq.heappush(heap, (current, pr, pc))
            continue
        pivots += 1
        prow = rows.pop(pr)
        pcol = cols.pop(pc)
        for c in prow:
            if c != pc:
                col = cols.get(c)
                if col is not None:
                    col.pop(pr, None)
        for r, coeff in pcol.items():
            if r == pr:
                continue
            mult = coeff * pivot  # pivot is its own inverse
            target = rows[r]
            for c, pv in prow.items():
                if c == pc:
                    target.pop(pc, None)
                    continue
                value = target.get(c, 0) - mult * pv
                if value == 0:
                    if c in target:
                        del target[c]
                        cols[c].pop(r, None)
                else:
                    target[c] = value
                    cols[c][r] = value
                    if value == 1 or value == -1:
                        heapq.heappush(
                            heap, ((len(target) - 1) * (len(cols[c]) - 1), r, c)
                        )
            if not target:
                del rows[r]
    return pivots, {r: row for r, row in rows.items() if row}


def _dense_snf_factors(matrix: list[list[int]]) -> list[int]:
    """Invariant factors of a dense integer matrix (classical algorithm)."""
    m = [row[:] for row in matrix]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    factors: list[int] = []
    top = 0
    while top < min(n_rows, n_cols):
        # locate the smallest nonzero entry in the active block
        pivot = None
        best = None
        for i in range(top, n_rows):
            for j in range(top, n_cols):
                v = abs(m[i][j])
                if v and (best is None or v < best):
                    best = v
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        m[top], m[pi] = m[pi], m[top]
        for row in m:
            row[top], row[pj] = row[pj], row[top]
        while True:
            # clear the pivot column
            restart = False
            for i in range(top + 1, n_rows):
                if m[i][top]:
                    q = m[i][top] // m[top][top]
                    m[i] = [a - q * b for a, b in zip(m[i], m[top])]
                    if m[i][top]:  # remainder became the new, smaller pivot
                        m[top], m[i] = m[i], m[top]
                        restart = True
                        break
            if restart:
                continue
            # clear the pivot row
            for j in range(top + 1, n_cols):
                if m[top][j]:
                    q = m[top][j] // m[top][top]
                    for row in m:
                        row[j] -= q * row[top]
                    if m[top][j]:
                        for row in m:
                            row[top], row[j] = row[j], row[top]
                        restart = True
                        break
            if restart:
                continue
            break
        # pivot must divide every remaining entry; if not, fold that row in
        offender = None
        for i in range(top + 1, n_rows):
            for j in range(top + 1, n_cols):
                if m[i][j] % m[top][top]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            m[top] = [a + b for a, b in zip(m[top], m[offender])]
            continue
        factors.append(abs(m[top][top]))
        top += 1
    return factors


def _smith_from_rows(rows: SparseRows) -> SmithNormalForm:
    unit_rank, residual = _eliminate_units(rows)
    if not residual:
        return SmithNormalForm(unit_rank, (1,) * unit_rank)
    live_rows = sorted(residual)
    live_cols = sorted({c for row in residual.values() for c in row})
    col_pos = {c: k for k, c in enumerate(live_cols)}
    dense = [[0] * len(live_cols) for _ in live_rows]
    for k, r in enumerate(live_rows):
        for c, v in residual[r].items():
            dense[k][col_pos[c]] = v
    tail = _dense_snf_factors(dense)
    factors = [1] * unit_rank + tail
    return SmithNormalForm(unit_rank + len(tail), tuple(factors))


def smith_normal_form(
    matrix: BoundaryMatrix | Sequence[Sequence[int]] | SparseRows,
) -> SmithNormalForm:
    """Rank and divisibility-normalized invariant factors.

    Accepts a :class:`BoundaryMatrix`, a dense row-major matrix, or sparse
    dict-of-rows.  Arithmetic is exact; entries may grow without overflow.
    """
    rows: SparseRows = {}
    if isinstance(matrix, BoundaryMatrix):
        for (i, j), v in matrix.entries.items():
            if v:
                rows.setdefault(i, {})[j] = int(v)
    elif isinstance(matrix, dict):
        for i, row in matrix.items():
            filtered = {j: int(v) for j, v in row.items() if v}
            if filtered:
                rows[i] = filtered
    else:
        for i, row in enumerate(matrix):
            filtered = {j: int(v) for j, v in enumerate(row) if v}
            if filtered:
                rows[i] = filtered
    return _smith_from_rows(rows)


@dataclass(frozen=True)
class HomologyReport:
    """Betti numbers and invariant-factor torsion per dimension."""

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]
    reduced: bool

    def euler_characteristic(self) -> int:
        """Alternating sum of Betti numbers (add 1 back if reduced)."""
        total = sum((-1) ** k * b for k, b in enumerate(self.betti))
        return total + (1 if self.reduced and self.betti else 0)

    def group_description(self, k: int) -> str:
        parts = []
        b = self.betti[k] if k < len(self.betti) else 0
        if b:
            parts.append(f"Z^{b}" if b > 1 else "Z")
        if k < len(self.torsion):
            parts.extend(f"Z/{d}" for d in self.torsion[k])
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        lines = [f"{k}: {self.group_description(k)}" for k in range(len(self.betti))]
        return "\n".join(lines) if lines else "(empty complex)"


def homology(complex_: SimplicialComplex, *, reduced: bool = False) -> HomologyReport:
    """Integer homology of a finite complex.

    Processes one boundary matrix at a time so that only two face levels
    are alive at once; the Penney n=6 complex (2.6M faces) fits with room
    to spare.
    """
    levels = complex_._int_faces_by_dimension()
    if not levels:
        return HomologyReport((), (), reduced)
    f = [len(level) for level in levels]
    top = len(levels) - 1
    ranks = [0] * (top + 2)
    torsion: list[tuple[int, ...]] = [()] * (top + 2)
    lower_index = {face: i for i, face in enumerate(levels[0])}
    for d in range(1, top + 1):
        rows = _sparse_boundary(lower_index, levels[d])
        snf = _smith_from_rows(rows)
        ranks[d] = snf.rank
        torsion[d] = snf.torsion
        lower_index = {face: i for i, face in enumerate(levels[d])}
        levels[d - 1] = []  # free the level; no longer needed
    betti = []
    for k in range(top + 1):
        b = f[k] - ranks[k] - ranks[k + 1]
        if k == 0 and reduced:
            b -= 1
        betti.append(b)
    return HomologyReport(tuple(betti), tuple(torsion[1 : top + 2]), reduced)


def betti_numbers_mod2(complex_: SimplicialComplex) -> tuple[int, ...]:
    """Betti numbers over the 2-element field, by column reduction.

    Independent of the integer path; used to cross-check persistence.
    """
    levels = complex_._int_faces_by_dimension()
    if not levels:
        return ()
    f = [len(level) for level in levels]
    top = len(levels) - 1
    ranks = [0] * (top + 2)
    lower_index = {face: i for i, face in enumerate(levels[0])}
    for d in range(1, top + 1):
        columns = []
        for face in levels[d]:
            mask = 0
            for pos in range(len(face)):
                sub = face[:pos] + face[pos + 1 :]
                mask |= 1 << lower_index[sub]
            columns.append(mask)
        ranks[d] = _gf2_rank(columns)
        lower_index = {face: i for i, face in enumerate(levels[d])}
    return tuple(f[k] - ranks[k] - ranks[k + 1] for k in range(top + 1))


def _gf2_rank(columns: Iterable[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        while col:
            low = col.bit_length() - 1
            other = pivots.get(low)
            if other is None:
                pivots[low] = col
                rank += 1
                break
            col ^= other
    return rank
