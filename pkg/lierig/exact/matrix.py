"""
Exact Rational Matrices
=======================

Dense storage in a read-only numpy ``dtype=object`` array of
``fractions.Fraction``; elimination runs on sparse row dictionaries because
the cochain differentials are mostly zeros.

Pivoting: for every column, left to right, the first remaining row (in row
order) with a nonzero entry is the pivot. Rank, kernel dimension and
signature do not depend on this choice; the concrete kernel vectors do.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from lierig.errors import (
    DimensionMismatchError,
    NonSquareMatrixError,
    NonSymmetricMatrixError,
    SingularMatrixError,
)
from lierig.exact.polynomial import RatPolynomial

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)

Vector = Tuple[Fraction, ...]
SparseRow = Dict[int, Fraction]


def as_vector(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def _object_array(rows, cols):
    return np.full((rows, cols), ZERO, dtype=object)


class RatMatrix:
    """Immutable rows x cols matrix over the rationals.

    ``RatMatrix([[1, 2], [3, 4]])`` or ``RatMatrix(np_array)``; entries may be
    ints, Fractions or strings such as ``"-3/4"``.
    """

    __slots__ = ("_data",)

    def __init__(self, entries, cols: int | None = None):
        if isinstance(entries, np.ndarray) and entries.ndim == 2:
            data = _object_array(*entries.shape)
            for (i, j), value in np.ndenumerate(entries):
                data[i, j] = Fraction(value)
        else:
            rows = [list(r) for r in entries]
            width = cols if cols is not None else (len(rows[0]) if rows else 0)
            if any(len(r) != width for r in rows):
                raise DimensionMismatchError("ragged rows in matrix literal")
            data = _object_array(len(rows), width)
            for i, r in enumerate(rows):
                for j, value in enumerate(r):
                    data[i, j] = Fraction(value)
        data.setflags(write=False)
        self._data = data

    @classmethod
    def _wrap(cls, data: np.ndarray) -> RatMatrix:
        out = cls.__new__(cls)
        data.setflags(write=False)
        out._data = data
        return out

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RatMatrix:
        return cls._wrap(_object_array(rows, cols))

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls.diagonal([ONE] * n)

    @classmethod
    def diagonal(cls, values: Sequence) -> RatMatrix:
        n = len(values)
        data = _object_array(n, n)
        for i, v in enumerate(values):
            data[i, i] = Fraction(v)
        return cls._wrap(data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> RatMatrix:
        """Matrix whose j-th column is ``columns[j]``."""
        height = rows if rows is not None else (len(columns[0]) if columns else 0)
        data = _object_array(height, len(columns))
        for j, col in enumerate(columns):
            if len(col) != height:
                raise DimensionMismatchError(f"column {j} has length {len(col)}, expected {height}")
            for i, v in enumerate(col):
                data[i, j] = Fraction(v)
        return cls._wrap(data)

    @classmethod
    def from_sparse(cls, rows: int, cols: int, entries: Dict[Tuple[int, int], Fraction]) -> RatMatrix:
        data = _object_array(rows, cols)
        for (i, j), v in entries.items():
            data[i, j] = Fraction(v)
        return cls._wrap(data)

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self._data.shape

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key) -> Fraction:
        i, j = key
        return self._data[i, j]

    def row(self, i: int) -> Vector:
        return tuple(self._data[i, :])

    def column(self, j: int) -> Vector:
        return tuple(self._data[:, j])

    def to_lists(self) -> List[List[Fraction]]:
        return [list(r) for r in self._data]

    def vec(self) -> Vector:
        """Columns stacked top to bottom."""
        return tuple(self._data.flatten(order="F"))

    def sparse_rows(self) -> List[SparseRow]:
        out: List[SparseRow] = [{} for _ in range(self.rows)]
        for i, j in zip(*np.nonzero(self._data)):
            out[i][int(j)] = self._data[i, j]
        return out

    def is_zero(self) -> bool:
        return not np.any(self._data)

    def is_symmetric(self) -> bool:
        return self.is_square and bool(np.all(self._data == self._data.T))

    def transpose(self) -> RatMatrix:
        return RatMatrix._wrap(self._data.T.copy())

    T = property(transpose)

    def trace(self) -> Fraction:
        if not self.is_square:
            raise NonSquareMatrixError(f"trace of a {self.rows}x{self.cols} matrix")
        return sum(self._data.diagonal(), ZERO)

    def _check_same_shape(self, other: RatMatrix, op: str):
        if self.shape != other.shape:
            raise DimensionMismatchError(f"cannot {op} {self.shape} and {other.shape} matrices")

    def __add__(self, other: RatMatrix) -> RatMatrix:
        self._check_same_shape(other, "add")
        return RatMatrix._wrap(self._data + other._data)

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        self._check_same_shape(other, "subtract")
        return RatMatrix._wrap(self._data - other._data)

    def __neg__(self) -> RatMatrix:
        return RatMatrix._wrap(-self._data)

    def __mul__(self, scalar) -> RatMatrix:
        if isinstance(scalar, RatMatrix):
            raise TypeError("use @ for matrix products")
        return RatMatrix._wrap(self._data * Fraction(scalar))

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            if self.cols != other.rows:
                raise DimensionMismatchError(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
                )
            out = _object_array(self.rows, other.cols)
            for i, k in zip(*np.nonzero(self._data)):
                out[i, :] += self._data[i, k] * other._data[k, :]
            return RatMatrix._wrap(out)
        return self.apply(other)

    def apply(self, vector: Sequence) -> Vector:
        """Matrix times column vector."""
        if len(vector) != self.cols:
            raise DimensionMismatchError(f"vector of length {len(vector)} for {self.cols} columns")
        out = [ZERO] * self.rows
        for i, j in zip(*np.nonzero(self._data)):
            if vector[j]:
                out[i] += self._data[i, j] * vector[j]
        return tuple(out)

    def commutator(self, other: RatMatrix) -> RatMatrix:
        return self @ other - other @ self

    def power(self, k: int) -> RatMatrix:
        if not self.is_square:
            raise NonSquareMatrixError(f"power of a {self.rows}x{self.cols} matrix")
        out = RatMatrix.identity(self.rows)
        for _ in range(k):
            out = out @ self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self._data == other._data))

    def __hash__(self) -> int:
        return hash((self.shape, tuple(self._data.flat)))

    def __repr__(self) -> str:
        return f"RatMatrix({[[str(v) for v in r] for r in self._data]})"

    def __str__(self) -> str:
        cells = [[str(v) for v in r] for r in self._data]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)


def hstack(blocks: Sequence[RatMatrix]) -> RatMatrix:
    return RatMatrix._wrap(np.hstack([b._data for b in blocks]))


def vstack(blocks: Sequence[RatMatrix]) -> RatMatrix:
    return RatMatrix._wrap(np.vstack([b._data for b in blocks]))


# -- elimination ------------------------------------------------------------


def _axpy(row: SparseRow, pivot: SparseRow, factor: Fraction) -> SparseRow:
    """row + factor * pivot, dropping cancelled entries."""
    out = dict(row)
    for j, v in pivot.items():
        s = out.get(j, ZERO) + factor * v
        if s:
            out[j] = s
        else:
            out.pop(j, None)
    return out


def echelon(rows: Iterable[SparseRow], ncols: int, reduced: bool = True) -> List[Tuple[int, SparseRow]]:
    """Gauss-Jordan on sparse rows.

    Returns ``(pivot column, normalized pivot row)`` pairs in increasing
    column order. With ``reduced`` the pivot columns are cleared above too.
    """
    remaining = [dict(r) for r in rows if r]
    pivots: List[Tuple[int, SparseRow]] = []
    for c in range(ncols):
        if not remaining:
            break
        idx = next((k for k, r in enumerate(remaining) if r.get(c)), None)
        if idx is None:
            continue
        prow = remaining.pop(idx)
        inv = ONE / prow[c]
        prow = {j: v * inv for j, v in prow.items()}
        survivors = []
        for r in remaining:
            f = r.get(c)
            if f:
                r = _axpy(r, prow, -f)
            if r:
                survivors.append(r)
        remaining = survivors
        pivots.append((c, prow))
    if reduced:
        for k in range(len(pivots) - 1, -1, -1):
            c, prow = pivots[k]
            for m in range(k):
                cm, other = pivots[m]
                f = other.get(c)
                if f:
                    pivots[m] = (cm, _axpy(other, prow, -f))
    return pivots


def rank(m: RatMatrix) -> int:
    # rank of the transpose is the same; eliminate along the shorter side
    source = m if m.rows >= m.cols else m.T
    r = len(echelon(source.sparse_rows(), source.cols, reduced=False))
    logger.debug(f"rank of {m.rows}x{m.cols} matrix: {r}")
    return r


def rref(m: RatMatrix) -> Tuple[RatMatrix, Tuple[int, ...]]:
    """Reduced row echelon form and its pivot columns; zero rows at the bottom."""
    pivots = echelon(m.sparse_rows(), m.cols, reduced=True)
    entries = {(i, j): v for i, (_, prow) in enumerate(pivots) for j, v in prow.items()}
    return RatMatrix.from_sparse(m.rows, m.cols, entries), tuple(c for c, _ in pivots)


def kernel_basis(m: RatMatrix) -> List[Vector]:
    """Right null space, one vector per free column (that coordinate set to 1)."""
    pivots = echelon(m.sparse_rows(), m.cols, reduced=True)
    pivot_cols = {c for c, _ in pivots}
    basis = []
    for free in range(m.cols):
        if free in pivot_cols:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for c, prow in pivots:
            f = prow.get(free)
            if f:
                v[c] = -f
        basis.append(tuple(v))
    return basis


def row_space_basis(vectors: Iterable[Sequence], ncols: int) -> List[Vector]:
    """Canonical reduced echelon basis of the span of ``vectors``."""
    rows = [{j: Fraction(v) for j, v in enumerate(vec) if v} for vec in vectors]
    out = []
    for _, prow in echelon(rows, ncols, reduced=True):
        v = [ZERO] * ncols
        for j, x in prow.items():
            v[j] = x
        out.append(tuple(v))
    return out


def solve(m: RatMatrix, rhs: Sequence) -> Vector | None:
    """One solution of m x = rhs, or None when the system is inconsistent."""
    if len(rhs) != m.rows:
        raise DimensionMismatchError(f"right-hand side of length {len(rhs)} for {m.rows} rows")
    rows = m.sparse_rows()
    for i, b in enumerate(rhs):
        if b:
            rows[i][m.cols] = Fraction(b)
    pivots = echelon(rows, m.cols + 1, reduced=True)
    if any(c == m.cols for c, _ in pivots):
        return None
    x = [ZERO] * m.cols
    for c, prow in pivots:
        x[c] = prow.get(m.cols, ZERO)
    return tuple(x)


def inverse(m: RatMatrix) -> RatMatrix:
    if not m.is_square:
        raise NonSquareMatrixError(f"inverse of a {m.rows}x{m.cols} matrix")
    n = m.rows
    rows = m.sparse_rows()
    for i in range(n):
        rows[i][n + i] = ONE
    pivots = echelon(rows, 2 * n, reduced=True)
    if len(pivots) < n or pivots[n - 1][0] != n - 1:
        raise SingularMatrixError("matrix is singular")
    entries = {(i, j - n): v for i, (_, prow) in enumerate(pivots) for j, v in prow.items() if j >= n}
    return RatMatrix.from_sparse(n, n, entries)


# -- polynomials of a matrix ------------------------------------------------


def evaluate_at_matrix(p: RatPolynomial, m: RatMatrix) -> RatMatrix:
    """p(m) by Horner's rule."""
    if not m.is_square:
        raise NonSquareMatrixError(f"cannot substitute a {m.rows}x{m.cols} matrix")
    n = m.rows
    acc = RatMatrix.zeros(n, n)
    ident = RatMatrix.identity(n)
    for c in reversed(p.coeffs):
        acc = acc @ m + ident * c
    return acc


def char_poly(m: RatMatrix) -> RatPolynomial:
    """det(x I - m) by Faddeev-LeVerrier; no division except by the step count."""
    if not m.is_square:
        raise NonSquareMatrixError(f"characteristic polynomial of a {m.rows}x{m.cols} matrix")
    n = m.rows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    ident = RatMatrix.identity(n)
    acc = RatMatrix.zeros(n, n)
    for k in range(1, n + 1):
        acc = m @ acc + ident * coeffs[n - k + 1]
        coeffs[n - k] = -(m @ acc).trace() / k
    return RatPolynomial(coeffs)


def min_poly(m: RatMatrix) -> RatPolynomial:
    """Monic minimal polynomial: first linear dependency among vec(m^0), vec(m^1), ..."""
    if not m.is_square:
        raise NonSquareMatrixError(f"minimal polynomial of a {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return RatPolynomial([1])
    powers = [RatMatrix.identity(n).vec()]
    current = RatMatrix.identity(n)
    for _ in range(n):
        current = current @ m
        powers.append(current.vec())
        kernel = kernel_basis(RatMatrix.from_columns(powers))
        if kernel:
            # earlier powers are independent, so the kernel is a single line
            relation = kernel[0]
            return RatPolynomial(relation).monic()
    raise AssertionError("Cayley-Hamilton bounds the degree by n")


def signature(m: RatMatrix) -> Tuple[int, int, int]:
    """Inertia (positive, negative, zero) by symmetric congruence."""
    if not m.is_symmetric():
        raise NonSymmetricMatrixError("signature needs a symmetric matrix")
    n = m.rows
    a = m.to_lists()
    pos = neg = 0

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        for r in a:
            r[i], r[j] = r[j], r[i]

    for step in range(n):
        diag = next((i for i in range(step, n) if a[i][i]), None)
        if diag is None:
            pair = next(
                ((i, j) for i in range(step, n) for j in range(i + 1, n) if a[i][j]),
                None,
            )
            if pair is None:
                break
            i, j = pair
            # add row/column j to row/column i: new a[i][i] = 2 a[i][j]
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            diag = i
        swap(step, diag)
        p = a[step][step]
        if p > 0:
            pos += 1
        else:
            neg += 1
        pivot_row = list(a[step])
        for r in range(step + 1, n):
            f = pivot_row[r]
            if not f:
                continue
            for c in range(step + 1, n):
                a[r][c] -= f * pivot_row[c] / p
        for r in range(step + 1, n):
            a[r][step] = ZERO
            a[step][r] = ZERO
    return pos, neg, n - pos - neg
