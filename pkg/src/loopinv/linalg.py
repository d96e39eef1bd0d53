"""Exact linear algebra over the rationals.

Matrices are dense with ``Fraction`` entries.  Row reduction first clears
denominators row by row and then eliminates with integer cross
multiplication, keeping rows gcd-reduced, so every result is exact; there
is no floating-point path anywhere in this module.  All operations are
pure functions on immutable values and safe to call concurrently.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

Vector = tuple[Fraction, ...]


class DimensionMismatchError(ValueError):
    """Operand shapes are incompatible."""

    category = "DimensionMismatch"


class NotAnInvolutionError(ValueError):
    """A matrix passed as an involution does not square to the identity."""

    category = "NotAnInvolution"


def as_vector(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


class QMatrix:
    """Dense rows-by-cols matrix over Q, row-major ``Fraction`` entries.

    Empty shapes (0 x n, n x 0) are legal; they occur for cochain degrees
    with empty monomial bases.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(Fraction(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise DimensionMismatchError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows_data: Sequence[Sequence], cols: Optional[int] = None) -> "QMatrix":
        rows_data = [list(r) for r in rows_data]
        if cols is None:
            cols = len(rows_data[0]) if rows_data else 0
        for r in rows_data:
            if len(r) != cols:
                raise DimensionMismatchError("rows have varying lengths")
        flat = [e for r in rows_data for e in r]
        return cls(len(rows_data), cols, flat)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: Optional[int] = None) -> "QMatrix":
        columns = [list(c) for c in columns]
        if rows is None:
            if not columns:
                raise DimensionMismatchError("row count required for a matrix with no columns")
            rows = len(columns[0])
        for c in columns:
            if len(c) != rows:
                raise DimensionMismatchError("columns have varying lengths")
        flat = [columns[j][i] for i in range(rows) for j in range(len(columns))]
        return cls(rows, len(columns), flat)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence) -> "QMatrix":
        n = len(values)
        return cls(n, n, [values[i] if i == j else 0 for i in range(n) for j in range(n)])

    def __getitem__(self, rc: tuple[int, int]) -> Fraction:
        r, c = rc
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> Vector:
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def column(self, c: int) -> Vector:
        return tuple(self.entries[r * self.cols + c] for r in range(self.rows))

    def columns(self) -> list[Vector]:
        return [self.column(c) for c in range(self.cols)]

    def transpose(self) -> "QMatrix":
        return QMatrix.from_columns([self.row(r) for r in range(self.rows)], rows=self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_identity(self) -> bool:
        if not self.is_square():
            return False
        return all(
            self.entries[i * self.cols + j] == (1 if i == j else 0)
            for i in range(self.rows)
            for j in range(self.cols)
        )

    def shifted_diagonal(self, scalar) -> "QMatrix":
        """self + scalar * I (square matrices only)."""
        if not self.is_square():
            raise DimensionMismatchError("diagonal shift needs a square matrix")
        s = Fraction(scalar)
        entries = list(self.entries)
        for i in range(self.rows):
            entries[i * self.cols + i] += s
        return QMatrix(self.rows, self.cols, entries)

    def matvec(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatchError(
                f"matvec: {self.rows}x{self.cols} matrix with length-{len(v)} vector"
            )
        v = [Fraction(x) for x in v]
        out = []
        for r in range(self.rows):
            row = self.row(r)
            out.append(sum((row[j] * v[j] for j in range(self.cols) if v[j]), Fraction(0)))
        return tuple(out)

    def __mul__(self, other: "QMatrix") -> "QMatrix":
        if not isinstance(other, QMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        cols = [self.matvec(other.column(c)) for c in range(other.cols)]
        return QMatrix.from_columns(cols, rows=self.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(e) for e in self.row(r)) for r in range(self.rows)
        )
        return f"QMatrix({self.rows}x{self.cols}: {body})"


def _reduce_row(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            return row
    if g > 1:
        return [x // g for x in row]
    return row


def _int_rows(m: QMatrix, extra_columns: Sequence[Sequence] = ()) -> list[list[int]]:
    """Rows of [m | extra] scaled row-wise to integers (rank-preserving)."""
    extra = [list(c) for c in extra_columns]
    out = []
    for r in range(m.rows):
        row = list(m.row(r)) + [Fraction(c[r]) for c in extra]
        den = 1
        for e in row:
            d = e.denominator
            den = den * d // gcd(den, d)
        out.append(_reduce_row([int(e * den) for e in row]))
    return out


def _echelon(rows: list[list[int]], n_pivot_cols: int) -> tuple[list[list[int]], list[int]]:
    """Forward elimination in place; pivots searched in the first
    n_pivot_cols columns only (columns beyond are carried along, which is
    how augmented solves reuse this routine).

    Pivot rows are chosen by largest absolute entry in the current column;
    columns are processed left to right so the pivot columns returned are
    the leftmost independent set.
    """
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(n_pivot_cols):
        if r >= nrows:
            break
        best, best_val = -1, 0
        for k in range(r, nrows):
            v = abs(rows[k][c])
            if v > best_val:
                best, best_val = k, v
        if best < 0:
            continue
        if best != r:
            rows[r], rows[best] = rows[best], rows[r]
        pv = rows[r][c]
        prow = rows[r]
        for k in range(r + 1, nrows):
            v = rows[k][c]
            if v:
                rows[k] = _reduce_row([pv * a - v * b for a, b in zip(rows[k], prow)])
        pivots.append(c)
        r += 1
    return rows, pivots


def kernel_and_pivots(m: QMatrix) -> tuple[list[Vector], tuple[int, ...]]:
    """One elimination pass: (kernel basis, pivot column indices).

    Kernel vectors are returned as primitive integer vectors (as
    Fractions), one per free column, in ascending free-column order; they
    are linearly independent and each satisfies m . v = 0.
    """
    n = m.cols
    rows, pivots = _echelon(_int_rows(m), n)
    pivot_set = set(pivots)
    basis: list[Vector] = []
    for f in range(n):
        if f in pivot_set:
            continue
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for i in range(len(pivots) - 1, -1, -1):
            c = pivots[i]
            row = rows[i]
            s = sum((row[j] * x[j] for j in range(c + 1, n) if x[j]), Fraction(0))
            x[c] = -s / row[c]
        basis.append(_primitive(x))
    return basis, tuple(pivots)


def _primitive(x: list[Fraction]) -> Vector:
    den = 1
    for e in x:
        d = e.denominator
        den = den * d // gcd(den, d)
    ints = [int(e * den) for e in x]
    g = 0
    for v in ints:
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-w for w in ints]
            break
    return tuple(Fraction(v) for v in ints)


def rank(m: QMatrix) -> int:
    """Rank over Q, computed exactly."""
    _, pivots = _echelon(_int_rows(m), m.cols)
    return len(pivots)


def pivot_columns(m: QMatrix) -> tuple[int, ...]:
    """Leftmost column indices forming a basis of the column span."""
    _, pivots = _echelon(_int_rows(m), m.cols)
    return tuple(pivots)


def kernel_basis(m: QMatrix) -> list[Vector]:
    """Basis of {v : m . v = 0}; len == cols - rank."""
    basis, _ = kernel_and_pivots(m)
    return basis


def solve_in_span(basis: QMatrix, targets: Sequence[Sequence]) -> list[Optional[Vector]]:
    """For each target vector, coefficients over the columns of `basis`
    reproducing it exactly, or None when the target is outside the span.

    A matrix with zero columns spans only the zero vector; its witness is
    the empty tuple, so callers must test ``is not None`` rather than
    truthiness.
    """
    k = basis.cols
    targets = [as_vector(t) for t in targets]
    for t in targets:
        if len(t) != basis.rows:
            raise DimensionMismatchError(
                f"target length {len(t)} does not match {basis.rows} rows"
            )
    rows, pivots = _echelon(_int_rows(basis, extra_columns=targets), k)
    tail = rows[len(pivots) :]
    results: list[Optional[Vector]] = []
    for ti in range(len(targets)):
        col = k + ti
        if any(row[col] for row in tail):
            results.append(None)
            continue
        x = [Fraction(0)] * k
        for i in range(len(pivots) - 1, -1, -1):
            c = pivots[i]
            row = rows[i]
            s = sum((row[j] * x[j] for j in range(c + 1, k) if x[j]), Fraction(0))
            x[c] = (Fraction(row[col]) - s) / row[c]
        results.append(tuple(x))
    return results


def column_span_contains(basis: QMatrix, v: Sequence) -> Optional[Vector]:
    """Witness coefficients with basis . w == v, or None if v is outside
    the column span."""
    return solve_in_span(basis, [v])[0]


def involution_eigen_dims(t: QMatrix) -> tuple[int, int]:
    """(dim of the +1 eigenspace, dim of the -1 eigenspace) of an
    involutive matrix; the two add up to the size.

    Raises NotAnInvolutionError unless t is square with t . t == identity.
    """
    if not t.is_square():
        raise NotAnInvolutionError(f"{t.rows}x{t.cols} matrix is not square")
    if not (t * t).is_identity():
        raise NotAnInvolutionError("matrix squared is not the identity")
    n = t.cols
    dim_plus = n - rank(t.shifted_diagonal(-1))
    dim_minus = n - rank(t.shifted_diagonal(1))
    return dim_plus, dim_minus
