"""Exact integer and rational matrix kernel.

Everything here works over Python's arbitrary-precision integers and
`fractions.Fraction`; no floating point anywhere.  These routines back every
other module: Smith normal form with recorded transforms, fraction-free
determinants, Sylvester signatures by exact congruence diagonalization, and
saturated integer kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


class IntMatrix:
    """Immutable integer matrix, row-major, arbitrary precision."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, entries: Sequence[Sequence[int]], rows: int | None = None, cols: int | None = None):
        data = tuple(tuple(int(x) for x in row) for row in entries)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("ragged rows")
        else:
            width = 0 if cols is None else cols
        self.rows = len(data) if rows is None else rows
        self.cols = width
        self._entries = data

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, diag: Sequence[int]) -> "IntMatrix":
        n = len(diag)
        return cls([[diag[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int) -> "IntMatrix":
        return cls([[col[i] for col in columns] for i in range(nrows)]) if columns else cls.zero(nrows, 0)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self._entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def tolists(self) -> list[list[int]]:
        return [list(row) for row in self._entries]

    def transpose(self) -> "IntMatrix":
        return IntMatrix([[self._entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
                         cols=self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        bt = other.transpose()._entries
        return IntMatrix([[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self._entries],
                         cols=other.cols)

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self._entries)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._entries, other._entries)],
                         cols=self.cols)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-a for a in row] for row in self._entries], cols=self.cols)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMatrix) and self._entries == other._entries and self.cols == other.cols

    def __hash__(self) -> int:
        return hash((self.cols, self._entries))

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self._entries]})"

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._entries[i][j] == self._entries[j][i] for i in range(self.rows) for j in range(i))

    def block_diag(self, other: "IntMatrix") -> "IntMatrix":
        n, m = self.rows + other.rows, self.cols + other.cols
        out = [[0] * m for _ in range(n)]
        for i in range(self.rows):
            out[i][: self.cols] = list(self._entries[i])
        for i in range(other.rows):
            out[self.rows + i][self.cols:] = list(other._entries[i])
        return IntMatrix(out, cols=m)

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return IntMatrix([list(a) + list(b) for a, b in zip(self._entries, other._entries)],
                         cols=self.cols + other.cols)


class RatMatrix:
    """Exact rational matrix (reduced fractions); thin companion to IntMatrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[Fraction | int]]):
        self.entries = [[Fraction(x) for x in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0

    @classmethod
    def from_int(cls, m: IntMatrix) -> "RatMatrix":
        return cls(m.tolists())

    def apply(self, vec: Sequence[Fraction | int]) -> list[Fraction]:
        return [sum((a * Fraction(b) for a, b in zip(row, vec)), Fraction(0)) for row in self.entries]

    def to_int(self) -> IntMatrix:
        for row in self.entries:
            for x in row:
                if x.denominator != 1:
                    raise ValueError(f"non-integral entry {x}")
        return IntMatrix([[int(x) for x in row] for row in self.entries])


@dataclass(frozen=True)
class SnfDecomposition:
    """u @ m @ v = d with u, v unimodular and d diagonal, d1 | d2 | ... ."""

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix

    def invariant_factors(self) -> list[int]:
        """Nonzero diagonal entries of d, in chain order."""
        k = min(self.d.rows, self.d.cols)
        return [self.d[i, i] for i in range(k) if self.d[i, i] != 0]


def smith_normal_form(m: IntMatrix) -> SnfDecomposition:
    """Smith normal form with recorded unimodular transforms.

    Kannan-Bachem style: pivot on the minimal nonzero absolute value to keep
    intermediate entries small, clear the pivot row and column by division
    steps, and repair divisibility of the trailing block before advancing.
    """
    a = m.tolists()
    nrows, ncols = m.rows, m.cols
    u = IntMatrix.identity(nrows).tolists()
    v = IntMatrix.identity(ncols).tolists()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def addmul_row(dst, src, q):
        # row_dst += q * row_src
        arow, srow = a[dst], a[src]
        for k in range(ncols):
            arow[k] += q * srow[k]
        urow, usrc = u[dst], u[src]
        for k in range(nrows):
            urow[k] += q * usrc[k]

    def addmul_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    t = 0
    while t < min(nrows, ncols):
        # locate minimal nonzero |entry| in the active block
        pivot = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                x = a[i][j]
                if x != 0 and (pivot is None or abs(x) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])

        while True:
            # clear column t by division; a nonzero remainder becomes the new pivot
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    addmul_row(i, t, -q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, ncols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    addmul_col(j, t, -q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # force pivot to divide the trailing block
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            addmul_row(t, offender, 1)
        t += 1

    # normalize diagonal signs
    for i in range(min(nrows, ncols)):
        if a[i][i] < 0:
            for k in range(ncols):
                a[i][k] = -a[i][k]
            for k in range(nrows):
                u[i][k] = -u[i][k]

    return SnfDecomposition(IntMatrix(u), IntMatrix(a, cols=ncols), IntMatrix(v))


def det_exact(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if not m.is_square():
        raise ValueError("determinant of non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.tolists()
    sign = 1
    prev = 1
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


def signature(gram: IntMatrix) -> tuple[int, int, int]:
    """Sylvester inertia (positive, negative, zero) of a symmetric matrix.

    Exact rational congruence diagonalization.  When every diagonal entry of
    the active block vanishes but some off-diagonal pairing does not, the
    usual hyperbolic repair (add row j to row i, and the same on columns)
    creates a nonzero diagonal pivot; the pair then contributes (1, 1).
    """
    if not m_is_symmetric(gram):
        raise ValueError("signature requires a symmetric matrix")
    n = gram.rows
    a = [[Fraction(x) for x in row] for row in gram.tolists()]
    pos = neg = 0
    for t in range(n):
        # prefer a nonzero diagonal pivot
        p = next((i for i in range(t, n) if a[i][i] != 0), None)
        if p is None:
            q = next(((i, j) for i in range(t, n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if q is None:
                break  # active block is zero
            i, j = q
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            p = i
        if p != t:
            a[t], a[p] = a[p], a[t]
            for row in a:
                row[t], row[p] = row[p], row[t]
        pivot = a[t][t]
        if pivot > 0:
            pos += 1
        else:
            neg += 1
        for i in range(t + 1, n):
            if a[i][t] != 0:
                f = a[i][t] / pivot
                for k in range(n):
                    a[i][k] -= f * a[t][k]
                for k in range(n):
                    a[k][i] -= f * a[k][t]
    return pos, neg, n - pos - neg


def m_is_symmetric(m: IntMatrix) -> bool:
    return m.is_symmetric()


def rational_kernel(m: IntMatrix) -> list[tuple[int, ...]]:
    """Primitive integer basis of ker(m), saturated in Z^cols.

    With u m v = d, the kernel is spanned by the columns of v whose diagonal
    entry vanishes; v unimodular makes each such column primitive and the
    span saturated.
    """
    snf = smith_normal_form(m)
    k = min(snf.d.rows, snf.d.cols)
    out = []
    for j in range(m.cols):
        if j >= k or snf.d[j, j] == 0:
            out.append(snf.v.column(j))
    return out


def unimodular_inverse(m: IntMatrix) -> IntMatrix:
    """Exact inverse of a matrix with det ±1 (Gauss-Jordan over Q)."""
    if not m.is_square():
        raise ValueError("inverse of non-square matrix")
    n = m.rows
    a = [[Fraction(x) for x in row] for row in m.tolists()]
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        p = next((i for i in range(col, n) if a[i][col] != 0), None)
        if p is None:
            raise ValueError("matrix is singular")
        a[col], a[p] = a[p], a[col]
        inv[col], inv[p] = inv[p], inv[col]
        piv = a[col][col]
        a[col] = [x / piv for x in a[col]]
        inv[col] = [x / piv for x in inv[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
                inv[i] = [x - f * y for x, y in zip(inv[i], inv[col])]
    return RatMatrix(inv).to_int()


def rational_inverse(m: IntMatrix) -> RatMatrix:
    """Exact rational inverse of a nonsingular integer matrix."""
    if not m.is_square():
        raise ValueError("inverse of non-square matrix")
    n = m.rows
    a = [[Fraction(x) for x in row] for row in m.tolists()]
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        p = next((i for i in range(col, n) if a[i][col] != 0), None)
        if p is None:
            raise ValueError("matrix is singular")
        a[col], a[p] = a[p], a[col]
        inv[col], inv[p] = inv[p], inv[col]
        piv = a[col][col]
        a[col] = [x / piv for x in a[col]]
        inv[col] = [x / piv for x in inv[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
                inv[i] = [x - f * y for x, y in zip(inv[i], inv[col])]
    return RatMatrix(inv)


def content(vec: Iterable[int]) -> int:
    """gcd of the entries (0 for the zero vector)."""
    g = 0
    for x in vec:
        g = gcd(g, x)
    return g


def bezout_combination(vec: Sequence[int]) -> tuple[int, list[int]]:
    """(g, coeffs) with sum(coeffs[i] * vec[i]) = g = content(vec)."""
    coeffs = [0] * len(vec)
    g = 0
    gi = -1
    for i, x in enumerate(vec):
        if x == 0:
            continue
        if g == 0:
            g, gi = abs(x), i
            coeffs[gi] = 1 if x > 0 else -1
            continue
        # extended gcd of running g with x
        old_r, r = g, x
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r != 0:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        if old_r < 0:
            old_r, old_s, old_t = -old_r, -old_s, -old_t
        for j in range(len(vec)):
            coeffs[j] *= old_s
        coeffs[i] += old_t
        g = old_r
    return g, coeffs


def ldlt(gram: IntMatrix) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Exact LDL^T factorization of a positive definite symmetric matrix.

    Returns (L, D) with L unit lower triangular and D the positive diagonal,
    both over Q.  Raises on a nonpositive pivot.
    """
    n = gram.rows
    a = [[Fraction(x) for x in row] for row in gram.tolists()]
    lower = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    diag: list[Fraction] = []
    for k in range(n):
        d = a[k][k] - sum(diag[j] * lower[k][j] ** 2 for j in range(k))
        if d <= 0:
            raise ValueError("matrix is not positive definite")
        diag.append(d)
        for i in range(k + 1, n):
            lower[i][k] = (a[i][k] - sum(diag[j] * lower[i][j] * lower[k][j] for j in range(k))) / d
    return lower, diag


def isqrt_floor_frac(x: Fraction) -> int:
    """floor(sqrt(x)) for x >= 0, exactly."""
    if x < 0:
        raise ValueError("negative radicand")
    from math import isqrt

    return isqrt(x.numerator * x.denominator) // x.denominator
