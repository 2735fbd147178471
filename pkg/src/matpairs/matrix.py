"""Dense immutable matrices over a :class:`~matpairs.rings.RingSpec`.

Zero-height and zero-width matrices are ordinary values; they act as the
neutral element for block composition, which is how a system ``(0 | A)`` is
stored (left matrix of width 0).

Text format, used by the CLI and for round trips::

    <rows>x<cols>[e11,e12,...;e21,...]

Entries are decimal integers or ``a/b`` rationals. Empty matrices are written
with an empty body, e.g. ``0x3[]`` or ``2x0[]``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, ParseError, RingMismatch
from .rings import RingSpec


class Matrix:
    __slots__ = ("ring", "rows", "cols", "_data", "_hash")

    def __init__(self, ring: RingSpec, data: Iterable[Sequence], rows: int | None = None,
                 cols: int | None = None):
        data = tuple(tuple(ring(x) for x in row) for row in data)
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if rows == 0:
            data = ()
        elif cols == 0 and not data:
            data = ((),) * rows
        elif len(data) != rows:
            raise DimensionMismatch(f"expected {rows} rows, got {len(data)}")
        if any(len(r) != cols for r in data):
            raise DimensionMismatch(f"ragged rows for a {rows}x{cols} matrix")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self._data = data if rows else ()
        self._hash = None

    @classmethod
    def _raw(cls, ring, data, rows, cols):
        # trusted constructor: data already reduced and well shaped
        m = object.__new__(cls)
        m.ring = ring
        m.rows = rows
        m.cols = cols
        m._data = data
        m._hash = None
        return m

    @classmethod
    def from_rows(cls, ring: RingSpec, rows: Iterable[Sequence], cols: int | None = None) -> "Matrix":
        rows = [[ring(x) for x in r] for r in rows]
        return cls(ring, rows, cols=cols if cols is not None else (len(rows[0]) if rows else 0))

    @classmethod
    def zeros(cls, ring: RingSpec, rows: int, cols: int) -> "Matrix":
        z = ring.zero
        return cls._raw(ring, tuple((z,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, ring: RingSpec, n: int) -> "Matrix":
        z, o = ring.zero, ring.one
        return cls._raw(ring, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), n, n)

    @classmethod
    def diag(cls, ring: RingSpec, values: Sequence, rows: int | None = None,
             cols: int | None = None) -> "Matrix":
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        data = [[ring.zero] * cols for _ in range(rows)]
        for i, v in enumerate(values):
            data[i][i] = ring(v)
        return cls(ring, data, rows, cols)

    # basic protocol
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> tuple:
        return tuple(x for row in self._data for x in row)

    def tolist(self) -> list[list]:
        return [list(r) for r in self._data]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.ring == other.ring and self.rows == other.rows
                and self.cols == other.cols and self._data == other._data)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.rows, self.cols, self._data))
        return self._hash

    def __repr__(self):
        return f"Matrix({self.ring}, {format_matrix(self)})"

    def __str__(self):
        return format_matrix(self)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._data for x in row)

    # arithmetic
    def _check_ring(self, other: "Matrix"):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        red = self.ring.reduce
        data = tuple(tuple(red(a + b) for a, b in zip(r, s)) for r, s in zip(self._data, other._data))
        return Matrix._raw(self.ring, data, self.rows, self.cols)

    def __neg__(self) -> "Matrix":
        red = self.ring.reduce
        return Matrix._raw(self.ring, tuple(tuple(red(-a) for a in r) for r in self._data),
                           self.rows, self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        red = self.ring.reduce
        z = self.ring.zero
        cols_of_other = tuple(zip(*other._data)) if other.rows else ((),) * other.cols
        data = tuple(
            tuple(red(sum((a * b for a, b in zip(r, c) if a and b), z)) for c in cols_of_other)
            for r in self._data
        )
        return Matrix._raw(self.ring, data, self.rows, other.cols)

    def scale(self, c) -> "Matrix":
        red = self.ring.reduce
        c = self.ring(c)
        return Matrix._raw(self.ring, tuple(tuple(red(c * a) for a in r) for r in self._data),
                           self.rows, self.cols)

    @property
    def T(self) -> "Matrix":
        data = tuple(zip(*self._data)) if self.rows else tuple(() for _ in range(self.cols))
        return Matrix._raw(self.ring, tuple(tuple(r) for r in data), self.cols, self.rows)

    # slicing / structure
    def submatrix(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> "Matrix":
        rows = range(self.rows) if rows is None else list(rows)
        cols = range(self.cols) if cols is None else list(cols)
        data = tuple(tuple(self._data[i][j] for j in cols) for i in rows)
        return Matrix._raw(self.ring, data, len(rows), len(cols))

    def column(self, j: int) -> "Matrix":
        return self.submatrix(cols=[j])

    def delete_column(self, j: int) -> "Matrix":
        if not 0 <= j < self.cols:
            raise IndexError(f"column {j} out of range for {self.cols} columns")
        return self.submatrix(cols=[c for c in range(self.cols) if c != j])

    def map(self, target: RingSpec, f=None) -> "Matrix":
        f = f or target
        return Matrix(target, [[f(x) for x in r] for r in self._data], self.rows, self.cols)


def hstack(*ms: Matrix) -> Matrix:
    ms = [m for m in ms]
    if not ms:
        raise ValueError("hstack needs at least one matrix")
    ring, rows = ms[0].ring, ms[0].rows
    for m in ms:
        if m.ring != ring:
            raise RingMismatch(f"{m.ring} vs {ring}")
        if m.rows != rows:
            raise DimensionMismatch(f"hstack row mismatch: {m.rows} vs {rows}")
    data = tuple(tuple(x for m in ms for x in m._data[i]) for i in range(rows))
    return Matrix._raw(ring, data, rows, sum(m.cols for m in ms))


def vstack(*ms: Matrix) -> Matrix:
    if not ms:
        raise ValueError("vstack needs at least one matrix")
    ring, cols = ms[0].ring, ms[0].cols
    for m in ms:
        if m.ring != ring:
            raise RingMismatch(f"{m.ring} vs {ring}")
        if m.cols != cols:
            raise DimensionMismatch(f"vstack column mismatch: {m.cols} vs {cols}")
    data = tuple(r for m in ms for r in m._data)
    return Matrix._raw(ring, data, sum(m.rows for m in ms), cols)


def block(rows_of_blocks: Sequence[Sequence[Matrix]]) -> Matrix:
    """Assemble a block matrix; every block must already have conforming shape."""
    return vstack(*(hstack(*r) for r in rows_of_blocks))


def block_diag(*ms: Matrix) -> Matrix:
    ring = ms[0].ring
    total_cols = sum(m.cols for m in ms)
    rows = []
    offset = 0
    for m in ms:
        rows.append(hstack(Matrix.zeros(ring, m.rows, offset), m,
                           Matrix.zeros(ring, m.rows, total_cols - offset - m.cols)))
        offset += m.cols
    return vstack(*rows) if rows else Matrix.zeros(ring, 0, 0)


# text format

_HEAD_RE = re.compile(r"\s*(\d+)\s*x\s*(\d+)\s*\[")
_ENTRY_RE = re.compile(r"^[+-]?\d+(?:/[+-]?\d+)?$")


def format_matrix(m: Matrix) -> str:
    body = ";".join(",".join(m.ring.format(x) for x in r) for r in m._data) if m.cols else ""
    return f"{m.rows}x{m.cols}[{body}]"


def parse_matrix_at(text: str, pos: int, ring: RingSpec) -> tuple[Matrix, int]:
    """Parse a matrix starting at ``pos``; return it and the index after ``]``."""
    head = _HEAD_RE.match(text, pos)
    if not head:
        raise ParseError("expected '<rows>x<cols>['", text, pos)
    rows, cols = int(head.group(1)), int(head.group(2))
    start = head.end()
    end = text.find("]", start)
    if end < 0:
        raise ParseError("unterminated matrix, missing ']'", text, len(text))
    body = text[start:end]
    if rows * cols == 0:
        if body.strip():
            raise ParseError(f"a {rows}x{cols} matrix must have an empty body", text, start)
        return Matrix.zeros(ring, rows, cols), end + 1
    data = []
    offset = start
    for row_text in body.split(";"):
        row = []
        for item in row_text.split(","):
            token = item.strip()
            if not _ENTRY_RE.match(token):
                raise ParseError(f"bad matrix entry {token!r}", text, offset)
            try:
                row.append(ring(Fraction(token)))
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(str(exc), text, offset) from None
            offset += len(item) + 1
        data.append(row)
    if len(data) != rows or any(len(r) != cols for r in data):
        raise ParseError(f"body does not match declared shape {rows}x{cols}", text, start)
    return Matrix(ring, data, rows, cols), end + 1


def parse_matrix(text: str, ring: RingSpec) -> Matrix:
    m, end = parse_matrix_at(text, 0, ring)
    if text[end:].strip():
        raise ParseError("trailing characters after matrix", text, end)
    return m
