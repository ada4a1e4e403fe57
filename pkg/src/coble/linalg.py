"""Small exact linear algebra.

``Mat`` holds entries from any commutative ring with +, -, * (Fractions or
MPoly); its determinant is computed by cofactor expansion, which is division
free and therefore valid over polynomial rings. The row-reduction helpers
(rref, rank, nullspace, invert) require Fraction entries.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DegenerateError, SchemaError


class Mat:

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows_t = tuple(tuple(r) for r in rows)
        if not rows_t or not rows_t[0]:
            raise SchemaError("shape", "matrices need at least one row and column")
        width = len(rows_t[0])
        if any(len(r) != width for r in rows_t):
            raise SchemaError("shape", "ragged rows in matrix")
        self.rows = rows_t

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    def transpose(self) -> "Mat":
        return Mat(tuple(zip(*self.rows)))

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise SchemaError("shape", "inner dimensions disagree in matrix product")
        cols = other.transpose().rows
        return Mat(
            tuple(
                tuple(sum((a * b for a, b in zip(row, col)), start=row[0] * 0) for col in cols)
                for row in self.rows
            )
        )

    def apply(self, vector) -> tuple:
        vec = tuple(vector)
        if len(vec) != self.ncols:
            raise SchemaError("shape", "vector length disagrees with matrix width")
        return tuple(sum((a * b for a, b in zip(row, vec)), start=row[0] * 0) for row in self.rows)

    def det(self):
        if self.nrows != self.ncols:
            raise SchemaError("non-square", "determinant of a non-square matrix")
        return _det(self.rows)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Mat(" + ", ".join("(" + ", ".join(map(str, r)) + ")" for r in self.rows) + ")"


def _det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * _det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def _fraction_rows(m: Mat):
    try:
        return [[Fraction(x) for x in row] for row in m.rows]
    except TypeError as exc:
        raise SchemaError("field-entries", "row reduction needs Fraction entries") from exc


def rref(m: Mat) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form and the pivot column indices."""
    rows = _fraction_rows(m)
    nrows, ncols = len(rows), len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return Mat(rows), tuple(pivots)


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def _integer_rows(m: Mat) -> list[list[int]]:
    # clear denominators and content per row; row scaling preserves the kernel
    out = []
    for row in _fraction_rows(m):
        den = 1
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in row]
        content = 0
        for v in ints:
            content = gcd(content, v)
        if content:
            out.append([v // content for v in ints])
    return out


def _bareiss_echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    # fraction-free row echelon form; exact integer divisions by the
    # previous pivot keep entries at minor size without any gcd work
    nrows, ncols = len(rows), len(rows[0])
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        head = rows[r][c]
        for i in range(r + 1, nrows):
            factor = rows[i][c]
            row_i, row_r = rows[i], rows[r]
            for j in range(c, ncols):
                row_i[j] = (head * row_i[j] - factor * row_r[j]) // prev
        prev = head
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows[:r], pivots


def nullspace(m: Mat) -> list[tuple[Fraction, ...]]:
    """A basis of the right kernel, one vector per free column."""
    ncols = m.ncols
    rows = _integer_rows(m)
    if not rows:
        return [
            tuple(Fraction(int(i == j)) for i in range(ncols)) for j in range(ncols)
        ]
    echelon, pivots = _bareiss_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for k in range(len(pivots) - 1, -1, -1):
            p = pivots[k]
            row = echelon[k]
            total = sum((row[j] * vec[j] for j in range(p + 1, ncols) if vec[j]), Fraction(0))
            vec[p] = -total / row[p]
        basis.append(tuple(vec))
    return basis


def primitive_integer(vector) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers (signs preserved)."""
    vec = [Fraction(x) for x in vector]
    denominator = 1
    for x in vec:
        denominator = denominator * x.denominator // gcd(denominator, x.denominator)
    ints = [int(x * denominator) for x in vec]
    common = 0
    for v in ints:
        common = gcd(common, v)
    if common == 0:
        return tuple(ints)
    return tuple(v // common for v in ints)


def invert(m: Mat) -> Mat:
    if m.nrows != m.ncols:
        raise SchemaError("non-square", "inverse of a non-square matrix")
    n = m.nrows
    rows = _fraction_rows(m)
    augmented = Mat([rows[i] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)])
    reduced, pivots = rref(augmented)
    if tuple(pivots[:n]) != tuple(range(n)) or len(pivots) < n:
        raise DegenerateError("singular", "matrix is not invertible")
    return Mat([row[n:] for row in reduced.rows])
