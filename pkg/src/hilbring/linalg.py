"""Exact dense linear algebra over the rationals.

Entries are :class:`fractions.Fraction`.  Elimination runs fraction-free
(Bareiss) on an integer copy of the matrix: every row is first cleared of
denominators, which changes neither the row space's kernel nor the pivot
columns.  Columns are never permuted.

A plain Gauss-Jordan over ``Fraction`` (:func:`rref`) is kept as an
independent reference path for tests.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


class DimensionError(ValueError):
    pass


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted in exact matrices")
    return Fraction(x)


class RationalMatrix:
    """Immutable dense matrix of :class:`~fractions.Fraction` entries."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(_frac(x) for x in row) for row in data)
        if rows:
            widths = {len(r) for r in rows}
            if len(widths) != 1:
                raise DimensionError(f"ragged rows: widths {sorted(widths)}")
            width = widths.pop()
            if cols is not None and cols != width:
                raise DimensionError(f"declared {cols} columns, rows have {width}")
        else:
            width = cols or 0
        self.rows = len(rows)
        self.cols = width
        self._data = rows

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RationalMatrix":
        for c in columns:
            if len(c) != rows:
                raise DimensionError(f"column of length {len(c)}, expected {rows}")
        return cls([[c[i] for c in columns] for i in range(rows)], cols=len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            return mat_mul(self, other)
        return mat_vec(self, other)

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.shape, self._data))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._data)
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"


def mat_mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    bt = [b.column(j) for j in range(b.cols)]
    return RationalMatrix(
        [[sum((x * y for x, y in zip(a.row(i), col)), Fraction(0)) for col in bt] for i in range(a.rows)],
        cols=b.cols,
    )


def mat_vec(a: RationalMatrix, v: Sequence) -> list[Fraction]:
    if len(v) != a.cols:
        raise DimensionError(f"cannot apply {a.shape} matrix to vector of length {len(v)}")
    v = [_frac(x) for x in v]
    return [sum((x * y for x, y in zip(a.row(i), v)), Fraction(0)) for i in range(a.rows)]


def _integer_rows(m: RationalMatrix) -> list[list[int]]:
    out = []
    for r in m._data:
        den = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * den) for x in r])
    return out


def _bareiss(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int], int]:
    """Fraction-free forward elimination in place.

    Returns ``(rows, pivot_columns, sign)`` where the first ``len(pivots)``
    rows are the echelon rows and ``sign`` is the parity of the row swaps.
    Within a column the pivot row is the one of largest absolute value.
    """
    nrows = len(rows)
    pivots: list[int] = []
    prev = 1
    sign = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        best = None
        for i in range(r, nrows):
            v = rows[i][c]
            if v and (best is None or abs(v) > abs(rows[best][c])):
                best = i
        if best is None:
            continue
        if best != r:
            rows[r], rows[best] = rows[best], rows[r]
            sign = -sign
        p = rows[r][c]
        prow = rows[r]
        for i in range(r + 1, nrows):
            row = rows[i]
            f = row[c]
            if f == 0:
                if p != prev:
                    # keep the row on the same determinant scale as its neighbours
                    for j in range(c + 1, ncols):
                        q, rem = divmod(p * row[j], prev)
                        assert rem == 0, "Bareiss division not exact"
                        row[j] = q
                continue
            for j in range(c + 1, ncols):
                q, rem = divmod(p * row[j] - f * prow[j], prev)
                assert rem == 0, "Bareiss division not exact"
                row[j] = q
            row[c] = 0
        prev = p
        pivots.append(c)
        r += 1
    return rows, pivots, sign


def echelon(m: RationalMatrix) -> tuple[list[list[int]], list[int]]:
    """Integer row-echelon form (fraction-free) and the pivot columns."""
    rows, pivots, _ = _bareiss(_integer_rows(m), m.cols)
    return rows[: len(pivots)], pivots


def pivot_columns(m: RationalMatrix) -> list[int]:
    """Pivot columns of the row-echelon form, scanning columns left to right."""
    return echelon(m)[1]


def rank(m: RationalMatrix) -> int:
    return len(pivot_columns(m))


def determinant(m: RationalMatrix) -> Fraction:
    if m.rows != m.cols:
        raise DimensionError(f"determinant of non-square {m.shape} matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    rows = []
    for r in m._data:
        den = lcm(*(x.denominator for x in r))
        scale *= den
        rows.append([int(x * den) for x in r])
    rows, pivots, sign = _bareiss(rows, n)
    if len(pivots) < n:
        return Fraction(0)
    # the last Bareiss pivot is the determinant of the (integer) matrix
    return Fraction(sign * rows[n - 1][n - 1]) / scale


def canonical_vector(v: Sequence) -> tuple[int, ...]:
    """Scale to an integer vector with content 1 and positive first nonzero entry."""
    v = [_frac(x) for x in v]
    den = lcm(*(x.denominator for x in v)) if v else 1
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    lead = next(x for x in ints if x)
    if lead < 0:
        g = -g
    return tuple(x // g for x in ints)


def _kernel_from_echelon(rows: list[list[int]], pivots: list[int], ncols: int) -> list[tuple[int, ...]]:
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for k in range(len(pivots) - 1, -1, -1):
            c = pivots[k]
            row = rows[k]
            s = sum((row[j] * x[j] for j in range(c + 1, ncols) if row[j]), Fraction(0))
            x[c] = -s / row[c]
        basis.append(canonical_vector(x))
    return basis


def nullspace(m: RationalMatrix, check: bool = True) -> list[tuple[int, ...]]:
    """Basis of the right kernel as canonical integer vectors.

    One vector per free column (in column order), obtained by setting that
    free variable to 1 and the others to 0.
    """
    rows, pivots = echelon(m)
    basis = _kernel_from_echelon(rows, pivots, m.cols)
    if check:
        if len(basis) + len(pivots) != m.cols:
            raise AssertionError("rank-nullity violated")
        for v in basis:
            if any(mat_vec(m, v)):
                raise AssertionError(f"kernel vector {v} is not annihilated")
    return basis


def rref(m: RationalMatrix) -> tuple[RationalMatrix, list[int]]:
    """Reduced row-echelon form by plain rational Gauss-Jordan (reference path)."""
    a = m.tolist()
    pivots = []
    r = 0
    for c in range(m.cols):
        piv = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return RationalMatrix(a, cols=m.cols), pivots


def nullspace_rref(m: RationalMatrix) -> list[tuple[int, ...]]:
    """Kernel basis via :func:`rref`; same normalization as :func:`nullspace`."""
    red, pivots = rref(m)
    pivset = set(pivots)
    basis = []
    for f in (c for c in range(m.cols) if c not in pivset):
        x = [Fraction(0)] * m.cols
        x[f] = Fraction(1)
        for k, c in enumerate(pivots):
            x[c] = -red[k, f]
        basis.append(canonical_vector(x))
    return basis


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"
