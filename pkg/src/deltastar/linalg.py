"""Exact dense linear algebra over the rationals.

Entries are ``fractions.Fraction``.  Elimination skips zero entries, which
keeps the mostly-sparse constraint and coordinate matrices cheap without a
separate sparse format.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

Row = List[Fraction]


class RatMatrix:
    """Row-major rational matrix with explicit shape (so 0-row matrices keep their width)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence], cols: int | None = None):
        rows_ = [[x if type(x) is Fraction else Fraction(x) for x in row] for row in data]
        if cols is None:
            if not rows_:
                raise ValueError("column count required for an empty matrix")
            cols = len(rows_[0])
        for row in rows_:
            if len(row) != cols:
                raise ValueError("ragged matrix")
        self.rows = len(rows_)
        self.cols = cols
        self.data: List[Row] = rows_

    @classmethod
    def _raw(cls, data: List[Row], cols: int) -> "RatMatrix":
        m = cls.__new__(cls)
        m.rows, m.cols, m.data = len(data), cols, data
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, size: int) -> "RatMatrix":
        return cls([[int(i == j) for j in range(size)] for i in range(size)], size)

    def __getitem__(self, ij: Tuple[int, int]) -> Fraction:
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.cols == other.cols and self.data == other.data

    def __repr__(self) -> str:
        return f"RatMatrix({self.rows}x{self.cols})"

    def tolist(self) -> List[Row]:
        return [list(r) for r in self.data]

    def transpose(self) -> "RatMatrix":
        if not self.rows:
            return RatMatrix([[] for _ in range(self.cols)], 0)
        return RatMatrix([list(col) for col in zip(*self.data)], self.rows)

    def stack(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.cols:
            raise ValueError("column counts differ")
        return RatMatrix._raw(self.data + other.data, self.cols)

    def apply(self, vec: Sequence[Fraction]) -> Row:
        """Matrix-vector product ``M v``."""
        if len(vec) != self.cols:
            raise ValueError("length mismatch")
        nz = [(j, v) for j, v in enumerate(vec) if v]
        return [sum((row[j] * v for j, v in nz), Fraction(0)) for row in self.data]


def rref(m: RatMatrix) -> Tuple[RatMatrix, int, List[int]]:
    """Reduced row-echelon form, rank and pivot columns.

    Pivot choice is the first nonzero entry scanning columns left to right.
    """
    a = [list(r) for r in m.data]
    nrows, ncols = m.rows, m.cols
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][col]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        prow = a[r]
        inv = 1 / prow[col]
        if inv != 1:
            for j in range(col, ncols):
                if prow[j]:
                    prow[j] *= inv
        nz = [j for j in range(col, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = a[i]
            f = row[col]
            if f:
                for j in nz:
                    row[j] -= f * prow[j]
        pivots.append(col)
        r += 1
    return RatMatrix._raw(a, ncols), len(pivots), pivots


def rank(m: RatMatrix) -> int:
    return rref(m)[1]


def nullspace(m: RatMatrix) -> RatMatrix:
    """Kernel basis, one vector per row, ordered by free column.

    Each basis vector has a 1 in its own free column and zeros in the other
    free columns.
    """
    red, rk, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * m.cols
        v[fcol] = Fraction(1)
        for r, pcol in enumerate(pivots):
            v[pcol] = -red.data[r][fcol]
        basis.append(v)
    return RatMatrix(basis, m.cols)


def rowspace_equal(a: RatMatrix, b: RatMatrix) -> bool:
    if a.cols != b.cols:
        raise ValueError("column counts differ")
    ra, rb = rank(a), rank(b)
    return ra == rb and rank(a.stack(b)) == ra


def in_rowspace(v: Sequence, a: RatMatrix) -> bool:
    if len(v) != a.cols:
        raise ValueError("length mismatch")
    return rank(a) == rank(a.stack(RatMatrix([v], a.cols)))


def intersection_dim(a: RatMatrix, b: RatMatrix) -> int:
    """dim(rowspace(a) ∩ rowspace(b))."""
    return rank(a) + rank(b) - rank(a.stack(b))


def solve_in_rowspace(v: Sequence, a: RatMatrix) -> Row | None:
    """Coefficients x with ``x @ a == v``, or None when v is outside the row space."""
    # kernel of [a; v]^T with last component -1
    aug = RatMatrix(a.data + [list(v)], a.cols).transpose()
    ker = nullspace(aug)
    for row in ker.data:
        if row[-1]:
            s = -1 / row[-1]
            return [s * x for x in row[:-1]]
    return None
