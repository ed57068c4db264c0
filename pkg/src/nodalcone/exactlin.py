"""Dense exact linear algebra over the rational numbers.

The scalar type is :class:`fractions.Fraction`: arbitrary precision,
always in lowest terms with a positive denominator, so every arithmetic
result is exact and canonical. ``MatrixQ`` is a small immutable dense
matrix over it. Elimination is gcd-normalized rational Gaussian
elimination (Fraction re-reduces after every operation), with a fixed
pivot rule: leftmost column first and, within a column, the first
nonzero row from the top. That rule makes ranks, echelon forms, kernel
bases and solutions bit-identical across runs, which golden values in
the test-suite rely on.

No floating point is used anywhere in this package; floats are rejected
at the boundary.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

VectorQ = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_scalar(value: int | str | Fraction) -> Fraction:
    """Coerce an int, a ``"p"`` / ``"p/q"`` string, or a Fraction.

    Floats are rejected: silently converting one would smuggle a binary
    rounding error into an exact computation.
    """
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass int, str or Fraction")
    return Fraction(value)


class MatrixQ:
    """Immutable dense rational matrix, row-major storage.

    Zero-by-n and n-by-zero shapes are legal and behave degenerately
    (rank 0, full or empty kernel) rather than erroring.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable) -> None:
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        flat = tuple(as_scalar(e) for e in entries)
        if len(flat) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(flat)}")
        self.rows = rows
        self.cols = cols
        self.entries = flat

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "MatrixQ":
        """Build from an iterable of rows; ``cols`` disambiguates the empty case."""
        data = [list(r) for r in rows]
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("rows must all have the same length")
            if cols is not None and cols != width:
                raise ValueError(f"cols={cols} does not match row length {width}")
            cols = width
        elif cols is None:
            cols = 0
        return cls(len(data), cols, [e for r in data for e in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "MatrixQ":
        data = [list(c) for c in columns]
        if data:
            height = len(data[0])
            if any(len(c) != height for c in data):
                raise ValueError("columns must all have the same length")
            if rows is not None and rows != height:
                raise ValueError(f"rows={rows} does not match column length {height}")
            rows = height
        elif rows is None:
            rows = 0
        return cls(rows, len(data), [data[j][i] for i in range(rows) for j in range(len(data))])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "MatrixQ":
        return cls(rows, cols, [_ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "MatrixQ":
        return cls(n, n, [_ONE if i == j else _ZERO for i in range(n) for j in range(n)])

    def at(self, i: int, j: int) -> Fraction:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> VectorQ:
        if not 0 <= i < self.rows:
            raise IndexError(f"row {i} outside {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> VectorQ:
        if not 0 <= j < self.cols:
            raise IndexError(f"column {j} outside {self.rows}x{self.cols} matrix")
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def transpose(self) -> "MatrixQ":
        return MatrixQ(
            self.cols,
            self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def mul_vec(self, vec: Sequence) -> VectorQ:
        v = [as_scalar(e) for e in vec]
        if len(v) != self.cols:
            raise ValueError(f"vector length {len(v)} does not match {self.cols} columns")
        out = []
        for i in range(self.rows):
            base = i * self.cols
            acc = _ZERO
            for j in range(self.cols):
                acc += self.entries[base + j] * v[j]
            out.append(acc)
        return tuple(out)

    def row_lists(self) -> list[list[Fraction]]:
        """Mutable copy of the rows, for elimination working storage."""
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixQ):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"MatrixQ({self.rows}x{self.cols}: {body})"


def _forward_eliminate(rows: list[list[Fraction]], pivot_cols: int) -> list[int]:
    """In-place forward elimination; returns the pivot column indices.

    Pivot search is restricted to the first ``pivot_cols`` columns so the
    same routine serves plain matrices and augmented solve blocks. Row
    operations always apply to the full row width.
    """
    pivots: list[int] = []
    piv_r = 0
    nrows = len(rows)
    for col in range(pivot_cols):
        if piv_r == nrows:
            break
        sel = None
        for r in range(piv_r, nrows):
            if rows[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        if sel != piv_r:
            rows[piv_r], rows[sel] = rows[sel], rows[piv_r]
        prow = rows[piv_r]
        pivot = prow[col]
        if pivot != 1:
            inv = _ONE / pivot
            prow = [e * inv for e in prow]
            rows[piv_r] = prow
        for r in range(piv_r + 1, nrows):
            f = rows[r][col]
            if f:
                cur = rows[r]
                rows[r] = [a - f * b for a, b in zip(cur, prow)]
        pivots.append(col)
        piv_r += 1
    return pivots


def _back_substitute(rows: list[list[Fraction]], pivots: list[int]) -> None:
    for r in range(len(pivots) - 1, -1, -1):
        col = pivots[r]
        prow = rows[r]
        for rr in range(r):
            f = rows[rr][col]
            if f:
                cur = rows[rr]
                rows[rr] = [a - f * b for a, b in zip(cur, prow)]


def rref(m: MatrixQ) -> tuple[MatrixQ, tuple[int, ...]]:
    """Reduced row echelon form together with the pivot column indices."""
    rows = m.row_lists()
    pivots = _forward_eliminate(rows, m.cols)
    _back_substitute(rows, pivots)
    return MatrixQ.from_rows(rows, cols=m.cols), tuple(pivots)


def rank(m: MatrixQ) -> int:
    """Exact rank. Forward elimination only; cheaper than full rref."""
    rows = m.row_lists()
    return len(_forward_eliminate(rows, m.cols))


def kernel_basis(m: MatrixQ) -> list[VectorQ]:
    """Canonical basis of the right kernel.

    One basis vector per free column of the reduced echelon form, free
    columns taken in ascending index order, with a unit in the free slot
    and the negated reduced column elsewhere. This parametrization is a
    function of the matrix alone, so callers can treat basis order as
    part of the contract.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis: list[VectorQ] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [_ZERO] * m.cols
        v[free] = _ONE
        for r, pc in enumerate(pivots):
            v[pc] = -reduced.at(r, free)
        basis.append(tuple(v))
    return basis


def solve_many(m: MatrixQ, rhs_columns: Sequence[Sequence]) -> list[VectorQ | None]:
    """Solve ``m x = rhs`` for several right-hand sides with one elimination.

    Returns, per column, either the canonical solution (free variables
    set to zero) or ``None`` when that column is inconsistent.
    """
    k = len(rhs_columns)
    cols_exact = []
    for col in rhs_columns:
        vals = [as_scalar(e) for e in col]
        if len(vals) != m.rows:
            raise ValueError(f"rhs length {len(vals)} does not match {m.rows} rows")
        cols_exact.append(vals)
    aug = [list(m.row(i)) + [cols_exact[j][i] for j in range(k)] for i in range(m.rows)]
    pivots = _forward_eliminate(aug, m.cols)
    _back_substitute(aug, pivots)
    out: list[VectorQ | None] = []
    nrank = len(pivots)
    for j in range(k):
        consistent = all(aug[r][m.cols + j] == 0 for r in range(nrank, m.rows))
        if not consistent:
            out.append(None)
            continue
        x = [_ZERO] * m.cols
        for r, pc in enumerate(pivots):
            x[pc] = aug[r][m.cols + j]
        out.append(tuple(x))
    return out


def solve(m: MatrixQ, rhs: Sequence) -> VectorQ | None:
    """Canonical solution of ``m x = rhs`` or None when inconsistent.

    Canonical means: free variables are zero, pivot variables carry the
    reduced right-hand side, so the 1x2 system ``2x + 4y = 6`` solves
    to ``(3, 0)``.
    """
    return solve_many(m, [rhs])[0]
