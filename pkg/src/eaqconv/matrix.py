"""Matrices over the rational-function field GF(2)(D).

PolyMatrix is an immutable rectangular grid of RationalPoly entries with
exact Gaussian elimination. Row reduction uses the leftmost pivot column
and the lowest row index first, so reduced forms are deterministic and
usable as golden values.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .poly import LaurentPoly, RationalPoly

Entry = "RationalPoly | LaurentPoly | int | str"


class PolyMatrix:
    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[RationalPoly]]):
        grid = tuple(tuple(r) for r in rows)
        if grid:
            width = len(grid[0])
            if any(len(r) != width for r in grid):
                raise ValueError("ragged rows in matrix")
        self.rows = grid

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence[Entry]]) -> PolyMatrix:
        return cls([[RationalPoly.of(e) for e in row] for row in rows])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> PolyMatrix:
        z = RationalPoly.zero()
        return cls([[z] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> PolyMatrix:
        z, o = RationalPoly.zero(), RationalPoly.one()
        return cls([[o if i == j else z for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def entry(self, i: int, j: int) -> RationalPoly:
        return self.rows[i][j]

    def __getitem__(self, ij: tuple[int, int]) -> RationalPoly:
        return self.rows[ij[0]][ij[1]]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.rows for e in row)

    def is_polynomial(self) -> bool:
        return all(e.is_poly() for row in self.rows for e in row)

    def map_entries(self, fn: Callable[[RationalPoly], RationalPoly]) -> PolyMatrix:
        return PolyMatrix([[fn(e) for e in row] for row in self.rows])

    def reversed_time(self) -> PolyMatrix:
        return self.map_entries(lambda e: e.reversed_time())

    def transpose(self) -> PolyMatrix:
        return PolyMatrix(zip(*self.rows)) if self.rows else self

    def __add__(self, other: PolyMatrix) -> PolyMatrix:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch in matrix addition")
        return PolyMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        cols = other.transpose().rows
        zero = RationalPoly.zero()
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return PolyMatrix(out)

    def scaled(self, c: RationalPoly) -> PolyMatrix:
        return self.map_entries(lambda e: e * c)

    def hstack(self, other: PolyMatrix) -> PolyMatrix:
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch in hstack")
        return PolyMatrix([ra + rb for ra, rb in zip(self.rows, other.rows)])

    def vstack(self, other: PolyMatrix) -> PolyMatrix:
        if self.rows and other.rows and self.ncols != other.ncols:
            raise ValueError("column count mismatch in vstack")
        return PolyMatrix(self.rows + other.rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> PolyMatrix:
        return PolyMatrix([[self.rows[i][j] for j in cols] for i in rows])

    def rref(self) -> tuple[PolyMatrix, tuple[int, ...]]:
        """Reduced row-echelon form over GF(2)(D) and the pivot columns."""
        rows = [list(r) for r in self.rows]
        nrows, ncols = len(rows), self.ncols
        pivots = []
        pr = 0
        for pc in range(ncols):
            pivot_row = next((r for r in range(pr, nrows) if rows[r][pc]), None)
            if pivot_row is None:
                continue
            rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
            inv = rows[pr][pc].inverse()
            rows[pr] = [e * inv for e in rows[pr]]
            for r in range(nrows):
                if r != pr and rows[r][pc]:
                    c = rows[r][pc]
                    rows[r] = [e + c * p for e, p in zip(rows[r], rows[pr])]
            pivots.append(pc)
            pr += 1
            if pr == nrows:
                break
        return PolyMatrix(rows), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def row_space_equal(self, other: PolyMatrix) -> bool:
        """Equality of row spaces over the rational-function field."""
        return first_row_space_mismatch(self, other) is None

    def inverse(self) -> PolyMatrix:
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        reduced, pivots = self.hstack(PolyMatrix.identity(n)).rref()
        if pivots != tuple(range(n)):
            raise ValueError("matrix is singular")
        return reduced.submatrix(range(n), range(n, 2 * n))

    def det(self) -> RationalPoly:
        """Determinant by cofactor expansion (small matrices only)."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return RationalPoly.one()
        if n == 1:
            return self.rows[0][0]
        acc = RationalPoly.zero()
        rest = list(range(1, n))
        for j in range(n):
            if not self.rows[0][j]:
                continue
            minor = self.submatrix(rest, [c for c in range(n) if c != j])
            acc = acc + self.rows[0][j] * minor.det()
        return acc

    def __str__(self) -> str:
        return "\n".join("  ".join(str(e) for e in row) for row in self.rows)

    def __repr__(self) -> str:
        return f"PolyMatrix({self.nrows}x{self.ncols})"


def first_row_space_mismatch(a: PolyMatrix, b: PolyMatrix) -> tuple[int, int] | None:
    """None when the row spaces agree, else the first differing position of
    the two reduced forms (zero rows discarded). Used for diagnostics."""
    if a.ncols != b.ncols:
        raise ValueError("row spaces live in different ambient spaces")
    ra, pa = a.rref()
    rb, pb = b.rref()
    ka, kb = len(pa), len(pb)
    for i in range(max(ka, kb)):
        if i >= ka or i >= kb:
            return (i, (pb[i] if i >= ka else pa[i]))
        for j in range(a.ncols):
            if ra.rows[i][j] != rb.rows[i][j]:
                return (i, j)
    return None
