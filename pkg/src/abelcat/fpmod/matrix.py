"""Immutable integer matrices with exact arbitrary-precision entries."""

from __future__ import annotations

from typing import Iterable, Sequence


class Matrix:
    """A rows x cols integer matrix stored row-major as a tuple of tuples.

    Shapes with zero rows or zero columns are legal and keep their other
    dimension, which matters for maps into or out of the zero module.
    """

    __slots__ = ("rows", "cols", "data", "_hash")

    def __init__(self, data: Iterable[Sequence[int]], cols: int | None = None):
        data = tuple(tuple(int(x) for x in row) for row in data)
        if cols is None:
            if not data:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(data[0])
        for row in data:
            if len(row) != cols:
                raise ValueError(f"ragged row of length {len(row)}, expected {cols}")
        self.rows = len(data)
        self.cols = cols
        self.data = data
        self._hash = None

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def diagonal(cls, entries: Sequence[int], rows: int | None = None,
                 cols: int | None = None) -> Matrix:
        rows = len(entries) if rows is None else rows
        cols = len(entries) if cols is None else cols
        out = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(entries):
            out[i][i] = d
        return cls(out, cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> Matrix:
        for c in columns:
            if len(c) != rows:
                raise ValueError(f"column of length {len(c)}, expected {rows}")
        return cls([[c[i] for c in columns] for i in range(rows)], len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self.data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.data)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.data]

    @property
    def T(self) -> Matrix:
        return Matrix([[self.data[i][j] for i in range(self.rows)]
                       for j in range(self.cols)], self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.data))
        return self._hash

    def __repr__(self) -> str:
        return f"Matrix({self.tolist()!r}, cols={self.cols})"

    def _check_same_shape(self, other: Matrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix([[a + b for a, b in zip(r, s)]
                       for r, s in zip(self.data, other.data)], self.cols)

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix([[a - b for a, b in zip(r, s)]
                       for r, s in zip(self.data, other.data)], self.cols)

    def __neg__(self) -> Matrix:
        return Matrix([[-a for a in r] for r in self.data], self.cols)

    def scale(self, k: int) -> Matrix:
        return Matrix([[k * a for a in r] for r in self.data], self.cols)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols_b = other.columns()
        return Matrix([[sum(a * b for a, b in zip(r, c)) for c in cols_b]
                       for r in self.data], other.cols)

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.data)

    def mod(self, n: int) -> Matrix:
        return Matrix([[a % n for a in r] for r in self.data], self.cols)

    def hstack(self, *others: Matrix) -> Matrix:
        out = [list(r) for r in self.data]
        cols = self.cols
        for o in others:
            if o.rows != self.rows:
                raise ValueError(f"hstack row mismatch {self.rows} vs {o.rows}")
            for r, s in zip(out, o.data):
                r.extend(s)
            cols += o.cols
        return Matrix(out, cols)

    def vstack(self, *others: Matrix) -> Matrix:
        out = list(self.data)
        for o in others:
            if o.cols != self.cols:
                raise ValueError(f"vstack column mismatch {self.cols} vs {o.cols}")
            out.extend(o.data)
        return Matrix(out, self.cols)

    def select_columns(self, idx: Iterable[int]) -> Matrix:
        idx = list(idx)
        return Matrix([[r[j] for j in idx] for r in self.data], len(idx))

    def select_rows(self, idx: Iterable[int]) -> Matrix:
        idx = list(idx)
        return Matrix([self.data[i] for i in idx], self.cols)

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.data for a in r)

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(r) for r in self.data]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


def block_diagonal(*blocks: Matrix) -> Matrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [[0] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i, row in enumerate(b.data):
            out[r0 + i][c0:c0 + b.cols] = row
        r0 += b.rows
        c0 += b.cols
    return Matrix(out, cols)
