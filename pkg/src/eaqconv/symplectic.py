"""Shifted symplectic products, row operations and check-matrix expansion.

The shifted symplectic product of two generator rows is
(h1 (.) h2)(D) = z1(D).x2(D^-1) + x1(D).z2(D^-1); its coefficient at D^m
records whether the generators anticommute at relative frame shift m. The
matrix of all pairwise products certifies a valid code when it vanishes.

Expansion rewrites a frame-size-n code as an equivalent frame-size-l*n
code (a polyphase decomposition). It is implemented in the scaled-exponent
ring: an integer exponent e stands for D^(e/l), plugging D^(1/l) into a
polynomial keeps its integer support, and flooring keeps multiples of l.
expanded_omega computes the same object directly from the product matrix
and deliberately shares no code with expand, so each checks the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import RationalEntryError, ZeroScaleError
from .matrix import PolyMatrix
from .pauli import CheckMatrix
from .poly import LaurentPoly, RationalPoly, floor_fractional


def shifted_symplectic_product(
    row1: tuple[Sequence[RationalPoly], Sequence[RationalPoly]],
    row2: tuple[Sequence[RationalPoly], Sequence[RationalPoly]],
) -> RationalPoly:
    z1, x1 = row1
    z2, x2 = row2
    if len(z1) != len(z2) or len(x1) != len(x2):
        raise ValueError("rows act on different frame sizes")
    acc = RationalPoly.zero()
    for a, b in zip(z1, x2):
        if a and b:
            acc = acc + a * b.reversed_time()
    for a, b in zip(x1, z2):
        if a and b:
            acc = acc + a * b.reversed_time()
    return acc


def row_product(h: CheckMatrix, i: int, j: int) -> RationalPoly:
    return shifted_symplectic_product(h.row(i), h.row(j))


def omega_matrix(h: CheckMatrix) -> PolyMatrix:
    """Z(D) X^T(D^-1) + X(D) Z^T(D^-1), entry (i,j) = (h_i (.) h_j)(D)."""
    xt = h.x.reversed_time().transpose()
    zt = h.z.reversed_time().transpose()
    return (h.z @ xt) + (h.x @ zt)


def omega_is_symmetric(om: PolyMatrix) -> bool:
    """The defining symmetry Omega(D) = Omega^T(D^-1)."""
    return om == om.transpose().reversed_time()


# ---------------------------------------------------------------------------
# Row operations


@dataclass(frozen=True)
class SwapRows:
    i: int
    j: int


@dataclass(frozen=True)
class ScaleRow:
    i: int
    c: RationalPoly


@dataclass(frozen=True)
class AddMultiple:
    """row i <- row i + c * row j."""

    i: int
    j: int
    c: RationalPoly


RowOp = Union[SwapRows, ScaleRow, AddMultiple]
RowOpRecord = tuple[RowOp, ...]


def apply_row_ops(h: CheckMatrix, ops: Sequence[RowOp]) -> CheckMatrix:
    """Replay a row-operation record; equivalent to premultiplying by an
    invertible rational matrix, so the row space is preserved."""
    z_rows = [list(r) for r in h.z.rows]
    x_rows = [list(r) for r in h.x.rows]
    for op in ops:
        if isinstance(op, SwapRows):
            z_rows[op.i], z_rows[op.j] = z_rows[op.j], z_rows[op.i]
            x_rows[op.i], x_rows[op.j] = x_rows[op.j], x_rows[op.i]
        elif isinstance(op, ScaleRow):
            if op.c.is_zero():
                raise ZeroScaleError(f"scaling row {op.i + 1} by zero")
            z_rows[op.i] = [e * op.c for e in z_rows[op.i]]
            x_rows[op.i] = [e * op.c for e in x_rows[op.i]]
        elif isinstance(op, AddMultiple):
            z_rows[op.i] = [a + op.c * b for a, b in zip(z_rows[op.i], z_rows[op.j])]
            x_rows[op.i] = [a + op.c * b for a, b in zip(x_rows[op.i], x_rows[op.j])]
        else:
            raise TypeError(f"unknown row operation {op!r}")
    return CheckMatrix(h.n, PolyMatrix(z_rows), PolyMatrix(x_rows))


def row_ops_matrix(ops: Sequence[RowOp], r: int) -> PolyMatrix:
    """The invertible matrix R(D) a record corresponds to, for rank-r input."""
    ident = CheckMatrix(r, PolyMatrix.identity(r), PolyMatrix.zeros(r, r))
    return apply_row_ops(ident, ops).z


# ---------------------------------------------------------------------------
# Expansion


def _require_polynomial(h: CheckMatrix) -> None:
    if not h.is_polynomial():
        raise RationalEntryError(
            "expansion needs finite-weight generators; clear denominators first"
        )


def expand(h: CheckMatrix, l: int) -> CheckMatrix:
    """The l-expanded check matrix.

    Row block m of the result is the floor of D^(m/l) times the original
    rows evaluated at D^(1/l), spread over l column blocks where column
    block j carries the factor D^(-j/l). Block m holds all r original rows,
    so the result has l*r rows and frame size l*n.
    """
    if l < 1:
        raise ValueError("expansion factor must be >= 1")
    _require_polynomial(h)
    if l == 1:
        return h
    n, r = h.n, h.r
    z_rows, x_rows = [], []
    for m in range(l):
        for i in range(r):
            zi, xi = h.row(i)
            new_z = []
            new_x = []
            for j in range(l):
                shift = m - j
                new_z.extend(
                    RationalPoly(floor_fractional(e.num.shifted(shift), l)) for e in zi
                )
                new_x.extend(
                    RationalPoly(floor_fractional(e.num.shifted(shift), l)) for e in xi
                )
            z_rows.append(new_z)
            x_rows.append(new_x)
    return CheckMatrix(l * n, PolyMatrix(z_rows), PolyMatrix(x_rows))


def expanded_omega(om: PolyMatrix, l: int) -> PolyMatrix:
    """The product matrix of the l-expanded code, straight from the original
    product matrix: entry ((m,i),(m',j)) = floor(D^((m-m')/l) om_ij(D^(1/l)))."""
    if l < 1:
        raise ValueError("expansion factor must be >= 1")
    if l == 1:
        return om
    r = om.nrows
    rows = []
    for m in range(l):
        for i in range(r):
            row = []
            for m2 in range(l):
                for j in range(r):
                    e = om.rows[i][j]
                    if not e.is_poly():
                        raise RationalEntryError("expansion needs polynomial products")
                    row.append(RationalPoly(floor_fractional(e.num.shifted(m - m2), l)))
            rows.append(row)
    return PolyMatrix(rows)


def polynomial_order(f: LaurentPoly, max_order: int = 4096) -> int | None:
    """Smallest T >= 1 with f | D^T + 1, ignoring D^k factors.

    None when f has no such period within the bound (for instance when D
    divides every term after normalisation, which cannot happen here, or
    the bound is exceeded).
    """
    if f.is_zero():
        return None
    base = LaurentPoly(f.mask, 0)
    if base.is_one():
        return 1
    for t in range(1, max_order + 1):
        if base.divides(LaurentPoly.from_support({0, t})):
            return t
    return None


def expansion_factor_hint(h: CheckMatrix) -> int | None:
    """Conjectured right expansion factor for a single-generator code: the
    period of the inverse polynomial of the generator's shifted symplectic
    product. Diagnostic only; the search loop never relies on it."""
    if h.r != 1:
        return None
    p = row_product(h, 0, 0)
    if p.is_zero() or not p.is_poly():
        return None
    return polynomial_order(p.num)
