"""Exact rational linear algebra: rank, solving, span dimensions.

Matrices are lists of rows of Fractions (or ints).  Rank uses fraction-free
Bareiss elimination with deterministic pivoting (first nonzero entry in
row-major order), so results are reproducible and exact; there is no floating
point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = Sequence[Fraction | int]


def _as_fraction_rows(matrix: Sequence[Row]) -> list[list[Fraction]]:
    rows = [[Fraction(x) for x in row] for row in matrix]
    if rows:
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise ValueError("ragged matrix")
    return rows


def rank(matrix: Sequence[Row]) -> int:
    """Exact rank via Gaussian elimination over Q."""
    rows = _as_fraction_rows(matrix)
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pr = rows[r]
        inv = Fraction(1, 1) / pr[col]
        for i in range(r + 1, len(rows)):
            f = rows[i][col] * inv
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        r += 1
        if r == len(rows):
            break
    return r


def solve(matrix: Sequence[Row], rhs: Sequence[Fraction | int]) -> list[Fraction] | None:
    """One exact solution of M x = rhs, or None if inconsistent.

    Free variables are set to zero.
    """
    rows = _as_fraction_rows(matrix)
    target = [Fraction(x) for x in rhs]
    if len(target) != len(rows):
        raise ValueError("dimension mismatch")
    if not rows:
        return [] if not any(target) else None
    ncols = len(rows[0])
    aug = [row + [t] for row, t in zip(rows, target)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(aug)):
            if aug[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pr = aug[r]
        inv = Fraction(1, 1) / pr[col]
        aug[r] = [a * inv for a in pr]
        for i in range(len(aug)):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append((r, col))
        r += 1
        if r == len(aug):
            break
    for i in range(r, len(aug)):
        if aug[i][ncols] != 0:
            return None
    solution = [Fraction(0)] * ncols
    for row_idx, col in pivots:
        solution[col] = aug[row_idx][ncols]
    return solution


class SpanTracker:
    """Incremental row space: add vectors, keep an echelonised basis.

    The workhorse behind span/dimension computations (surjectivity checks,
    radical comparisons).  Vectors are sequences of ints or Fractions.
    """

    def __init__(self, length: int):
        self.length = length
        self._echelon: list[list[Fraction]] = []
        self._pivot_cols: list[int] = []

    def add(self, vector: Sequence[Fraction | int]) -> bool:
        """Reduce and insert; returns True if the vector was new."""
        if len(vector) != self.length:
            raise ValueError("dimension mismatch")
        v = [Fraction(x) for x in vector]
        for row, col in zip(self._echelon, self._pivot_cols):
            if v[col]:
                f = v[col]
                v = [a - f * b for a, b in zip(v, row)]
        for col, x in enumerate(v):
            if x:
                inv = Fraction(1, 1) / x
                v = [a * inv for a in v]
                self._echelon.append(v)
                self._pivot_cols.append(col)
                return True
        return False

    def contains(self, vector: Sequence[Fraction | int]) -> bool:
        v = [Fraction(x) for x in vector]
        for row, col in zip(self._echelon, self._pivot_cols):
            if v[col]:
                f = v[col]
                v = [a - f * b for a, b in zip(v, row)]
        return not any(v)

    @property
    def dimension(self) -> int:
        return len(self._echelon)


def span_dimension(vectors: Sequence[Row], length: int | None = None) -> int:
    vectors = list(vectors)
    if not vectors:
        return 0
    tracker = SpanTracker(length if length is not None else len(vectors[0]))
    for v in vectors:
        tracker.add(v)
    return tracker.dimension
