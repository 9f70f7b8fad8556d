from __future__ import annotations

from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

from ..errors import BadInput, InvariantViolation, NonSquare
from .field import ONE, ZERO, FieldElem, as_field

Vector = List[FieldElem]


@dataclass(frozen=True)
class QMatrix:
    """Dense row-major matrix over Q(i)."""

    rows: int
    cols: int
    entries: Tuple[FieldElem, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise BadInput("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise BadInput(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}",
                rows=self.rows,
                cols=self.cols,
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], cols: Optional[int] = None) -> "QMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries: List[FieldElem] = []
        for row in rows:
            if len(row) != cols:
                raise BadInput(f"ragged matrix: row of length {len(row)} in a {cols}-column matrix")
            entries.extend(as_field(value) for value in row)
        return cls(len(rows), cols, tuple(entries))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    def __getitem__(self, index: Tuple[int, int]) -> FieldElem:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        start = i * self.cols
        return list(self.entries[start:start + self.cols])

    def row_lists(self) -> List[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "QMatrix":
        return QMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def stack(self, other: "QMatrix") -> "QMatrix":
        if self.rows and other.rows and self.cols != other.cols:
            raise BadInput("cannot stack matrices with different column counts")
        cols = self.cols if self.rows else other.cols
        return QMatrix(self.rows + other.rows, cols, self.entries + other.entries)

    def apply(self, vector: Sequence[Any]) -> Vector:
        if len(vector) != self.cols:
            raise BadInput(f"vector of length {len(vector)} does not fit {self.cols} columns")
        v = [as_field(value) for value in vector]
        result: Vector = []
        for i in range(self.rows):
            total = ZERO
            for a, b in zip(self.row(i), v):
                if not a.is_zero and not b.is_zero:
                    total = total + a * b
            result.append(total)
        return result

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise BadInput(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        columns = [other.transpose().row(j) for j in range(other.cols)]
        entries: List[FieldElem] = []
        for i in range(self.rows):
            row = self.row(i)
            for column in columns:
                total = ZERO
                for a, b in zip(row, column):
                    if not a.is_zero and not b.is_zero:
                        total = total + a * b
                entries.append(total)
        return QMatrix(self.rows, other.cols, tuple(entries))

    def to_json(self) -> List[list]:
        return [[value.to_json() for value in self.row(i)] for i in range(self.rows)]


def _row_reduce(rows: List[Vector], ncols: int) -> List[int]:
    """Reduce ``rows`` in place to RREF; returns the pivot columns."""
    pivots: List[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if not rows[i][c].is_zero), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [value * inv if not value.is_zero else value for value in rows[r]]
        for i in range(nrows):
            if i == r:
                continue
            factor = rows[i][c]
            if factor.is_zero:
                continue
            pivot_row = rows[r]
            rows[i] = [
                value - factor * p if not p.is_zero else value
                for value, p in zip(rows[i], pivot_row)
            ]
        pivots.append(c)
        r += 1
    return pivots


def rank(m: QMatrix) -> int:
    return len(_row_reduce(m.row_lists(), m.cols))


def rank_and_nullspace(m: QMatrix) -> Tuple[int, List[Vector]]:
    """Rank and the reduced echelon basis of the right kernel (1 at each free column)."""
    rows = m.row_lists()
    pivots = _row_reduce(rows, m.cols)
    pivot_set = set(pivots)
    basis: List[Vector] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for index, column in enumerate(pivots):
            v[column] = -rows[index][free]
        basis.append(v)
    for v in basis:
        if any(not value.is_zero for value in m.apply(v)):
            raise InvariantViolation("nullspace vector is not annihilated by the matrix")
    if len(pivots) + len(basis) != m.cols:
        raise InvariantViolation("rank-nullity does not balance")
    return len(pivots), basis


def determinant(m: QMatrix) -> FieldElem:
    """Fraction-free Bareiss elimination."""
    if m.rows != m.cols:
        raise NonSquare(f"determinant of a non-square {m.rows}x{m.cols} matrix", rows=m.rows, cols=m.cols)
    n = m.rows
    if n == 0:
        return ONE
    a = m.row_lists()
    negate = False
    previous = ONE
    for k in range(n - 1):
        if a[k][k].is_zero:
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            negate = not negate
        pivot = a[k][k]
        for i in range(k + 1, n):
            lead = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) / previous
            row_i[k] = ZERO
        previous = pivot
    result = a[n - 1][n - 1]
    return -result if negate else result


def solve_linear(m: QMatrix, rhs: Sequence[Any]) -> Optional[Vector]:
    """A solution of m x = rhs (free variables set to 0), or None when inconsistent."""
    if len(rhs) != m.rows:
        raise BadInput(f"right-hand side of length {len(rhs)} for {m.rows} equations")
    augmented = [row + [as_field(value)] for row, value in zip(m.row_lists(), rhs)]
    pivots = _row_reduce(augmented, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    solution = [ZERO] * m.cols
    for index, column in enumerate(pivots):
        solution[column] = augmented[index][m.cols]
    return solution
