"""Exact matrices over the Gaussian rationals, plus rational linear algebra.

Two layers live here: CMatrix (complex-rational matrices, the carrier of
all representation data) and plain Fraction row-lists used for the real
linear systems behind morphism spaces and Tits-form kernels. Zero-row and
zero-column matrices are first-class values; the 0x0 matrix is invertible.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FormatError, SingularMatrixError
from .scalars import ZERO, ONE, GaussianRational, as_gaussian


@dataclass(frozen=True)
class CMatrix:
    rows: int
    cols: int
    entries: tuple[GaussianRational, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise FormatError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise FormatError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(rows: int, cols: int) -> "CMatrix":
        return CMatrix(rows, cols, (ZERO,) * (rows * cols))

    @staticmethod
    def identity(n: int) -> "CMatrix":
        return CMatrix(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @staticmethod
    def from_rows(rows) -> "CMatrix":
        """Build from a list of rows of ints / Fractions / GaussianRationals."""
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise FormatError("ragged rows in matrix literal")
        return CMatrix(r, c, tuple(as_gaussian(x) for row in rows for x in row))

    @staticmethod
    def column(values) -> "CMatrix":
        return CMatrix(len(values), 1, tuple(as_gaussian(x) for x in values))

    # -- access -------------------------------------------------------------

    def at(self, i: int, j: int) -> GaussianRational:
        return self.entries[i * self.cols + j]

    def row_list(self) -> list[list[GaussianRational]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_identity(self) -> bool:
        return self.is_square and self == CMatrix.identity(self.rows)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "CMatrix") -> "CMatrix":
        self._same_shape(other)
        return CMatrix(self.rows, self.cols,
                       tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "CMatrix") -> "CMatrix":
        self._same_shape(other)
        return CMatrix(self.rows, self.cols,
                       tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "CMatrix":
        return CMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, s) -> "CMatrix":
        s = as_gaussian(s)
        return CMatrix(self.rows, self.cols, tuple(s * a for a in self.entries))

    def __matmul__(self, other: "CMatrix") -> "CMatrix":
        if self.cols != other.rows:
            raise FormatError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        n, m, k = self.rows, other.cols, self.cols
        out = []
        for i in range(n):
            base = i * k
            for j in range(m):
                acc = ZERO
                for l in range(k):
                    a = self.entries[base + l]
                    if a:
                        acc = acc + a * other.entries[l * m + j]
                out.append(acc)
        return CMatrix(n, m, tuple(out))

    def conj(self) -> "CMatrix":
        return CMatrix(self.rows, self.cols, tuple(a.conjugate() for a in self.entries))

    def _same_shape(self, other: "CMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise FormatError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    # -- elimination-based operations ----------------------------------------

    def inverse(self) -> "CMatrix":
        """Exact inverse via Gauss-Jordan; raises SingularMatrixError."""
        if not self.is_square:
            raise SingularMatrixError(f"only square matrices invert, got {self.rows}x{self.cols}")
        n = self.rows
        aug = [list(self.entries[i * n:(i + 1) * n]) +
               [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col]), None)
            if piv is None:
                raise SingularMatrixError(f"singular {n}x{n} matrix")
            if piv != col:
                aug[col], aug[piv] = aug[piv], aug[col]
            inv_p = ONE / aug[col][col]
            aug[col] = [inv_p * x for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return CMatrix(n, n, tuple(aug[i][n + j] for i in range(n) for j in range(n)))

    def is_invertible(self) -> bool:
        if not self.is_square:
            return False
        try:
            self.inverse()
            return True
        except SingularMatrixError:
            return False

    def rank(self) -> int:
        return len(_echelon(self.row_list())[1])

    def column_space_basis(self) -> "CMatrix":
        """Columns forming a basis of the column space (original columns)."""
        _, pivots = _echelon(self.row_list())
        cols = []
        for j in pivots:
            cols.append([self.at(i, j) for i in range(self.rows)])
        return _from_columns(self.rows, cols)

    def nullspace_basis(self) -> "CMatrix":
        """Columns forming a basis of the right null space."""
        reduced, pivots = _echelon(self.row_list())
        free = [j for j in range(self.cols) if j not in pivots]
        cols = []
        for f in free:
            v = [ZERO] * self.cols
            v[f] = ONE
            for r, p in reversed(list(enumerate(pivots))):
                acc = ZERO
                for j in range(p + 1, self.cols):
                    if reduced[r][j]:
                        acc = acc + reduced[r][j] * v[j]
                v[p] = -acc
            cols.append(v)
        return _from_columns(self.cols, cols)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(repr(self.at(i, j)) for j in range(self.cols))
                         for i in range(self.rows))
        return f"CMatrix({self.rows}x{self.cols}: {body})"


def _from_columns(height: int, cols: list[list[GaussianRational]]) -> CMatrix:
    return CMatrix(height, len(cols),
                   tuple(cols[j][i] for i in range(height) for j in range(len(cols))))


def _echelon(rows: list[list[GaussianRational]]) -> tuple[list[list[GaussianRational]], list[int]]:
    """Reduced row echelon form over the Gaussian rationals; returns pivot columns."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv_p = ONE / rows[r][c]
        rows[r] = [inv_p * x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def hstack(a: CMatrix, b: CMatrix) -> CMatrix:
    if a.rows != b.rows:
        raise FormatError("hstack needs equal row counts")
    ent = []
    for i in range(a.rows):
        ent.extend(a.entries[i * a.cols:(i + 1) * a.cols])
        ent.extend(b.entries[i * b.cols:(i + 1) * b.cols])
    return CMatrix(a.rows, a.cols + b.cols, tuple(ent))


def vstack(a: CMatrix, b: CMatrix) -> CMatrix:
    if a.cols != b.cols:
        raise FormatError("vstack needs equal column counts")
    return CMatrix(a.rows + b.rows, a.cols, a.entries + b.entries)


def block_diag(a: CMatrix, b: CMatrix) -> CMatrix:
    top = hstack(a, CMatrix.zero(a.rows, b.cols))
    bot = hstack(CMatrix.zero(b.rows, a.cols), b)
    return vstack(top, bot)


def from_blocks(grid: list[list[CMatrix]]) -> CMatrix:
    """Assemble a matrix from a 2D grid of blocks with consistent sizes."""
    rows = None
    for row in grid:
        acc = row[0]
        for blk in row[1:]:
            acc = hstack(acc, blk)
        rows = acc if rows is None else vstack(rows, acc)
    return rows if rows is not None else CMatrix.zero(0, 0)


def submatrix(m: CMatrix, row_range: range, col_range: range) -> CMatrix:
    ent = tuple(m.at(i, j) for i in row_range for j in col_range)
    return CMatrix(len(row_range), len(col_range), ent)


# -- real (Fraction) linear systems -----------------------------------------

def fraction_rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form of a rational matrix."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        if p != 1:
            rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                ri, rr = rows[i], rows[r]
                rows[i] = [x - f * y for x, y in zip(ri, rr)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def fraction_nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the solution space of the homogeneous system rows . x = 0.

    Basis vectors are produced in free-column order with the free coordinate
    set to 1, so the output is canonical for a given equation order.
    """
    reduced, pivots = fraction_rref([row[:] for row in rows])
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            # rref row r reads x_p + sum_{j>p} a_j x_j = 0
            v[p] = -reduced[r][f]
        basis.append(v)
    return basis


def fraction_rank(rows: list[list[Fraction]]) -> int:
    return len(fraction_rref([row[:] for row in rows])[1])


def fraction_solve(columns: list[list[Fraction]], target: list[Fraction]) -> list[Fraction] | None:
    """Solve sum_j x_j * columns[j] = target exactly; None when inconsistent."""
    m = len(target)
    k = len(columns)
    aug = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(m)]
    reduced, pivots = fraction_rref(aug)
    for r, row in enumerate(reduced):
        if r < len(pivots):
            continue
        if row[k]:
            return None
    if any(p == k for p in pivots):
        return None
    x = [Fraction(0)] * k
    for r, p in enumerate(pivots):
        x[p] = reduced[r][k]
    return x
