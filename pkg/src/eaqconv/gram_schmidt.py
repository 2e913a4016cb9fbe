"""Polynomial symplectic orthogonalization.

The driver expands a check matrix by l = 1, 2, ... and, at each factor,
repeats three moves until every generator is classified or none applies:

  1. a generator whose products with all live generators vanish is an
     ancilla; it moves to the tail.
  2. two generators with zero self-products whose mutual product is a
     monomial D^m form an ebit pair: scale the second by D^m so the
     product becomes 1, move the pair to the front and decouple everyone
     else with h_k <- h_k + (h_k (.) h_2nd) h_1st + (h_k (.) h_1st) h_2nd.
  3. like 2 but with a general nonzero product p: scale the second row by
     1/p(D^-1) first, which makes the pair product 1 at the cost of
     infinite-weight entries.

If live generators remain and no move applies, the next factor is tried
on a fresh expansion of the original matrix. Scan order is fixed (lowest
row first; pairs ordered by higher index, then lower) so reruns are
byte-identical, and the recorded row operations replay exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoConvergenceError, RationalEntryError
from .matrix import PolyMatrix
from .pauli import CheckMatrix
from .poly import LaurentPoly, RationalPoly
from .symplectic import (
    AddMultiple,
    RowOp,
    RowOpRecord,
    ScaleRow,
    SwapRows,
    apply_row_ops,
    expand,
    omega_matrix,
)


def standard_form_check(om: PolyMatrix) -> tuple[int, int] | None:
    """(c, a) when om is exactly c antidiagonal unit blocks followed by an
    a-by-a zero block, else None."""
    r = om.nrows
    if r != om.ncols:
        return None
    one = RationalPoly.one()
    c = 0
    t = 0
    while t < r:
        row = om.rows[t]
        if all(e.is_zero() for e in row):
            break
        if t + 1 >= r or not (om.rows[t][t + 1] == one and om.rows[t + 1][t] == one):
            return None
        c += 1
        t += 2
    a = r - 2 * c
    for i in range(r):
        for j in range(r):
            expected = one if (i // 2 == j // 2 and i < 2 * c and i != j) else None
            e = om.rows[i][j]
            if expected is None:
                if not e.is_zero():
                    return None
            elif e != expected:
                return None
    return c, a


@dataclass(frozen=True)
class GSResult:
    """Outcome of the orthogonalization: processed generators with ebit
    pairs first (paired rows adjacent) and ancilla rows last."""

    h_std: CheckMatrix
    ops: RowOpRecord
    l: int
    c: int
    a: int
    k: int

    @property
    def n(self) -> int:
        return self.h_std.n

    @property
    def r(self) -> int:
        return self.h_std.r


class _Step4(Exception):
    pass


class _Worker:
    """Mutable row store for one expansion factor.

    Keeps the product matrix incrementally updated alongside the rows, so
    scans cost a lookup instead of an O(n) dot product."""

    def __init__(self, h: CheckMatrix):
        self.n = h.n
        self.z = [list(r) for r in h.z.rows]
        self.x = [list(r) for r in h.x.rows]
        self.om = [list(r) for r in omega_matrix(h).rows]
        self.ops: list[RowOp] = []

    def prod(self, i: int, j: int) -> RationalPoly:
        return self.om[i][j]

    def swap(self, i: int, j: int) -> None:
        if i == j:
            return
        self.z[i], self.z[j] = self.z[j], self.z[i]
        self.x[i], self.x[j] = self.x[j], self.x[i]
        self.om[i], self.om[j] = self.om[j], self.om[i]
        for row in self.om:
            row[i], row[j] = row[j], row[i]
        self.ops.append(SwapRows(min(i, j), max(i, j)))

    def scale(self, i: int, c: RationalPoly) -> None:
        if c.is_one():
            return
        self.z[i] = [e * c for e in self.z[i]]
        self.x[i] = [e * c for e in self.x[i]]
        cr = c.reversed_time()
        self.om[i] = [e * c for e in self.om[i]]
        # the diagonal entry picks up both factors
        for row in self.om:
            row[i] = row[i] * cr
        self.ops.append(ScaleRow(i, c))

    def add_multiple(self, i: int, j: int, c: RationalPoly) -> None:
        if c.is_zero():
            return
        self.z[i] = [a + c * b for a, b in zip(self.z[i], self.z[j])]
        self.x[i] = [a + c * b for a, b in zip(self.x[i], self.x[j])]
        cr = c.reversed_time()
        self.om[i] = [a + c * b for a, b in zip(self.om[i], self.om[j])]
        for r, row in enumerate(self.om):
            row[i] = row[i] + cr * row[j]
        self.ops.append(AddMultiple(i, j, c))

    def matrix(self) -> CheckMatrix:
        return CheckMatrix(self.n, PolyMatrix(self.z), PolyMatrix(self.x))


def _reduce_at_factor(h: CheckMatrix) -> tuple[CheckMatrix, RowOpRecord, int, int]:
    w = _Worker(h)
    r = h.r
    lo, hi = 0, r  # live rows occupy [lo, hi)
    while lo < hi:
        live = range(lo, hi)
        # step 1: fully decoupled generator -> ancilla, move to the tail
        anc = next(
            (i for i in live if all(w.prod(i, j).is_zero() for j in live)), None
        )
        if anc is not None:
            w.swap(anc, hi - 1)
            hi -= 1
            continue
        # step 2: an ebit pair with monomial product; step 3: general product
        pair = None
        for step in (2, 3):
            for j in live:
                for i in range(lo, j):
                    if w.prod(i, i).is_zero() and w.prod(j, j).is_zero():
                        p = w.prod(i, j)
                        if p.is_zero():
                            continue
                        if step == 2 and p.is_monomial():
                            pair = (i, j, p)
                            break
                        if step == 3 and not p.is_monomial():
                            pair = (i, j, p)
                            break
                if pair:
                    break
            if pair:
                break
        if pair is None:
            raise _Step4
        i, j, p = pair
        if p.is_monomial():
            m = p.num.min_exp
            if m:
                w.scale(j, RationalPoly(LaurentPoly.D(m)))
        else:
            w.scale(j, w.prod(j, i).inverse())
        assert w.prod(i, j).is_one()
        w.swap(i, lo)
        if j == lo:
            j = i
        w.swap(j, lo + 1)
        first, second = lo, lo + 1
        for k in range(lo + 2, hi):
            c1 = w.prod(k, second)
            c2 = w.prod(k, first)
            w.add_multiple(k, first, c1)
            w.add_multiple(k, second, c2)
            assert w.prod(k, first).is_zero() and w.prod(k, second).is_zero()
        lo += 2
    c = lo // 2
    return w.matrix(), tuple(w.ops), c, r - lo


def gram_schmidt(h: CheckMatrix, l_max: int = 8) -> GSResult:
    """Drive expansion plus row operations to the standard commutation form.

    Raises NoConvergenceError when no factor up to l_max succeeds; that is
    the practical stopping condition, and the caller should fall back to
    block-code treatment.
    """
    if not h.is_polynomial():
        raise RationalEntryError("orthogonalization starts from finite-weight generators")
    if l_max < 1:
        raise ValueError("l_max must be >= 1")
    for l in range(1, l_max + 1):
        hl = expand(h, l)
        try:
            h_std, ops, c, a = _reduce_at_factor(hl)
        except _Step4:
            continue
        result = GSResult(h_std=h_std, ops=ops, l=l, c=c, a=a, k=hl.n - hl.r)
        sf = standard_form_check(omega_matrix(h_std))
        assert sf == (c, a), "post-state exactness violated"
        return result
    raise NoConvergenceError(l_max)


def to_finite_weight(h: CheckMatrix) -> tuple[CheckMatrix, RowOpRecord]:
    """Scale each row by the least common multiple of its denominators so
    every generator becomes measurable (finite weight). Preserves the row
    space; the (c, a) split survives even though the exact standard form
    may not."""
    ops: list[RowOp] = []
    for i in range(h.r):
        z_row, x_row = h.row(i)
        lcm = LaurentPoly.one()
        for e in (*z_row, *x_row):
            den = e.den
            if not den.is_one():
                g = lcm.gcd(den)
                lcm = lcm.exact_div(g) * den
        if not lcm.is_one():
            ops.append(ScaleRow(i, RationalPoly(lcm)))
    return apply_row_ops(h, ops), tuple(ops)


def ebit_lower_bound(h: CheckMatrix) -> int:
    """rank of the shifted symplectic product matrix over GF(2)(D), halved
    and rounded up. Conjectured (not proven) optimal ebit count; report it,
    never rely on it."""
    rank = omega_matrix(h).rank()
    return (rank + 1) // 2
