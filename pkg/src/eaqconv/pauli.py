"""Pauli-sequence and GF(4) views of convolutional generators.

The binary check matrix [Z(D)|X(D)] is the workhorse representation; this
module provides the isomorphisms into and out of it. A GF(4) symbol is
encoded by its (z, x) bit pair under the map that sends a symplectic pair
to w*x + W*z (w and W denote the two primitive elements), so the symbol
alphabet reads 0 -> I, w -> X, 1 -> Y, W -> Z. The same encoding makes a
GF(4) polynomial literally a pair of binary polynomials.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import InconsistentFrameSizeError, RationalEntryError
from .matrix import PolyMatrix
from .poly import LaurentPoly, RationalPoly

PAULIS = "IXYZ"
# letter -> (z bit, x bit)
_LETTER_BITS = {"I": (0, 0), "X": (0, 1), "Y": (1, 1), "Z": (1, 0)}
_BITS_LETTER = {v: k for k, v in _LETTER_BITS.items()}


class PauliFrameSeq:
    """A finite-weight Pauli sequence organised in frames of n qubits.

    Frames outside the stored window are implicitly all-identity. The
    constructor trims identity frames at both ends, so two sequences are
    equal exactly when they act identically on the qubit stream.
    """

    __slots__ = ("frame_size", "frames", "start_offset")

    def __init__(self, frame_size: int, frames: Iterable[str], start_offset: int = 0):
        frames = [str(f) for f in frames]
        for f in frames:
            if len(f) != frame_size or any(ch not in PAULIS for ch in f):
                raise ValueError(f"bad frame {f!r} for frame size {frame_size}")
        blank = "I" * frame_size
        while frames and frames[0] == blank:
            frames.pop(0)
            start_offset += 1
        while frames and frames[-1] == blank:
            frames.pop()
        self.frame_size = frame_size
        self.frames = tuple(frames)
        self.start_offset = start_offset if frames else 0

    def is_identity(self) -> bool:
        return not self.frames

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliFrameSeq):
            return NotImplemented
        return (
            self.frame_size == other.frame_size
            and self.frames == other.frames
            and self.start_offset == other.start_offset
        )

    def __hash__(self) -> int:
        return hash((self.frame_size, self.frames, self.start_offset))

    def __str__(self) -> str:
        # bar-delimited frame notation, e.g. ...|XXX|XZY|...
        body = "|".join(self.frames) if self.frames else "I" * self.frame_size
        prefix = f"D^{self.start_offset}:" if self.start_offset else ""
        return f"{prefix}...|{body}|..."

    def __repr__(self) -> str:
        return f"PauliFrameSeq({self})"


class CheckMatrix:
    """The polynomial check matrix [Z(D)|X(D)] of a generator set."""

    __slots__ = ("n", "z", "x")

    def __init__(self, n: int, z: PolyMatrix, x: PolyMatrix):
        if z.nrows != x.nrows:
            raise ValueError("Z and X blocks disagree on generator count")
        if z.rows and (z.ncols != n or x.ncols != n):
            raise ValueError("Z and X blocks must each have n columns")
        self.n = n
        self.z = z
        self.x = x

    @classmethod
    def from_entries(cls, z_rows: Sequence[Sequence], x_rows: Sequence[Sequence]) -> CheckMatrix:
        z = PolyMatrix.from_entries(z_rows)
        x = PolyMatrix.from_entries(x_rows)
        return cls(z.ncols, z, x)

    @property
    def r(self) -> int:
        return self.z.nrows

    @property
    def k(self) -> int:
        """Net information qubits per frame for a fresh code."""
        return self.n - self.r

    def row(self, i: int) -> tuple[tuple[RationalPoly, ...], tuple[RationalPoly, ...]]:
        return self.z.rows[i], self.x.rows[i]

    def combined(self) -> PolyMatrix:
        return self.z.hstack(self.x)

    def is_polynomial(self) -> bool:
        return self.z.is_polynomial() and self.x.is_polynomial()

    def row_space_equal(self, other: CheckMatrix) -> bool:
        if self.n != other.n:
            raise ValueError("frame size mismatch")
        return self.combined().row_space_equal(other.combined())

    def submatrix_rows(self, rows: Sequence[int]) -> CheckMatrix:
        cols = range(self.n)
        return CheckMatrix(self.n, self.z.submatrix(rows, cols), self.x.submatrix(rows, cols))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CheckMatrix):
            return NotImplemented
        return self.n == other.n and self.z == other.z and self.x == other.x

    def __hash__(self) -> int:
        return hash((self.n, self.z, self.x))

    def __str__(self) -> str:
        lines = []
        for zr, xr in zip(self.z.rows, self.x.rows):
            lines.append(
                ", ".join(str(e) for e in zr) + " | " + ", ".join(str(e) for e in xr)
            )
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"CheckMatrix(n={self.n}, r={self.r})"


def pauli_to_binary(seqs: Sequence[PauliFrameSeq], pin_offsets: bool = True) -> CheckMatrix:
    """Map Pauli generator sequences to their polynomial check matrix.

    An X in frame j puts D^j in the X block, a Z puts it in the Z block and
    a Y in both. With pin_offsets=False each generator is shifted so its
    lowest used frame sits at exponent zero (D-shifts give equivalent
    generators); otherwise start_offset is honoured as stored.
    """
    if not seqs:
        raise ValueError("empty generator list")
    n = seqs[0].frame_size
    if any(s.frame_size != n for s in seqs):
        raise InconsistentFrameSizeError("generators disagree on frame size")
    z_rows, x_rows = [], []
    for seq in seqs:
        offset = seq.start_offset if pin_offsets else 0
        z_supp: list[set[int]] = [set() for _ in range(n)]
        x_supp: list[set[int]] = [set() for _ in range(n)]
        for j, frame in enumerate(seq.frames):
            for q, letter in enumerate(frame):
                zb, xb = _LETTER_BITS[letter]
                if zb:
                    z_supp[q].add(offset + j)
                if xb:
                    x_supp[q].add(offset + j)
        z_rows.append([RationalPoly(LaurentPoly.from_support(s)) for s in z_supp])
        x_rows.append([RationalPoly(LaurentPoly.from_support(s)) for s in x_supp])
    return CheckMatrix(n, PolyMatrix(z_rows), PolyMatrix(x_rows))


def binary_to_pauli(h: CheckMatrix) -> list[PauliFrameSeq]:
    """Invert pauli_to_binary. Requires every entry to be finite weight."""
    out = []
    for i in range(h.r):
        z_row, x_row = h.row(i)
        supports = []
        for e in (*z_row, *x_row):
            if not e.is_poly():
                raise RationalEntryError(
                    f"generator {i + 1} has a rational entry {e}; "
                    "clear denominators before converting to Pauli form"
                )
            supports.append(e.num.support)
        used = set().union(*supports)
        if not used:
            out.append(PauliFrameSeq(h.n, []))
            continue
        lo, hi = min(used), max(used)
        frames = []
        for j in range(lo, hi + 1):
            letters = []
            for q in range(h.n):
                zb = 1 if j in supports[q] else 0
                xb = 1 if j in supports[h.n + q] else 0
                letters.append(_BITS_LETTER[(zb, xb)])
            frames.append("".join(letters))
        out.append(PauliFrameSeq(h.n, frames, lo))
    return out


# ---------------------------------------------------------------------------
# GF(4)


class GF4Poly:
    """A polynomial over GF(4) stored as its (z, x) binary polynomial pair."""

    __slots__ = ("pz", "px")

    # symbol code -> (z bit, x bit): 0, w, W, 1
    SYMBOLS = {"0": (0, 0), "w": (0, 1), "W": (1, 0), "1": (1, 1)}

    def __init__(self, pz: LaurentPoly, px: LaurentPoly):
        self.pz = pz
        self.px = px

    @classmethod
    def zero(cls) -> GF4Poly:
        return cls(LaurentPoly.zero(), LaurentPoly.zero())

    @classmethod
    def from_symbols(cls, symbols: Sequence[tuple[str, int]]) -> GF4Poly:
        """Build from (symbol, exponent) pairs, symbol in {0,1,w,W}."""
        z: set[int] = set()
        x: set[int] = set()
        for sym, e in symbols:
            zb, xb = cls.SYMBOLS[sym]
            if zb:
                z ^= {e}
            if xb:
                x ^= {e}
        return cls(LaurentPoly.from_support(z), LaurentPoly.from_support(x))

    def is_zero(self) -> bool:
        return self.pz.is_zero() and self.px.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, GF4Poly):
            return NotImplemented
        return self.pz == other.pz and self.px == other.px

    def __hash__(self) -> int:
        return hash((self.pz, self.px))

    def __add__(self, other: GF4Poly) -> GF4Poly:
        return GF4Poly(self.pz + other.pz, self.px + other.px)

    def __mul__(self, other: GF4Poly) -> GF4Poly:
        # (z1*W + x1*w)(z2*W + x2*w) expanded over the basis {w, W, 1}
        z1, x1, z2, x2 = self.pz, self.px, other.pz, other.px
        cross = z1 * x2 + x1 * z2
        return GF4Poly(cross + x1 * x2, cross + z1 * z2)

    def mul_w(self) -> GF4Poly:
        """Multiply by the primitive element w."""
        return GF4Poly(self.pz + self.px, self.pz)

    def mul_wbar(self) -> GF4Poly:
        """Multiply by w's conjugate W = w^2."""
        return GF4Poly(self.px, self.pz + self.px)

    def symbol_at(self, e: int) -> str:
        zb = 1 if e in self.pz.support else 0
        xb = 1 if e in self.px.support else 0
        for sym, bits in self.SYMBOLS.items():
            if bits == (zb, xb):
                return sym
        raise AssertionError

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        exps = sorted(self.pz.support | self.px.support)
        parts = []
        for e in exps:
            sym = self.symbol_at(e)
            if e == 0:
                parts.append(sym)
            else:
                suffix = "D" if e == 1 else f"D^{e}"
                parts.append(suffix if sym == "1" else f"{sym}{suffix}")
        return "+".join(parts)

    def __repr__(self) -> str:
        return f"GF4Poly({self})"


class GF4Matrix:
    """A matrix of GF(4) polynomials (a classical convolutional code)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[GF4Poly]]):
        grid = tuple(tuple(r) for r in rows)
        if grid:
            width = len(grid[0])
            if any(len(r) != width for r in grid):
                raise ValueError("ragged rows in GF(4) matrix")
        self.rows = grid

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, GF4Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self) -> str:
        return f"GF4Matrix({self.nrows}x{self.ncols})"


def gf4_import(hc: GF4Matrix) -> CheckMatrix:
    """Turn a classical GF(4) convolutional code into quantum generators.

    Each classical row contributes its two nonproportional multiples: the
    W-multiple of row i lands at row i and the w-multiple at row r+i. The
    worked examples in the source literature print the W-multiple first,
    and every downstream golden value keys off that order.
    """
    if hc.nrows == 0:
        raise ValueError("empty generator list")
    n = hc.ncols
    blocks = []
    for mult in (GF4Poly.mul_wbar, GF4Poly.mul_w):
        for row in hc.rows:
            scaled = [mult(e) for e in row]
            blocks.append(
                (
                    [RationalPoly(e.pz) for e in scaled],
                    [RationalPoly(e.px) for e in scaled],
                )
            )
    z = PolyMatrix([b[0] for b in blocks])
    x = PolyMatrix([b[1] for b in blocks])
    return CheckMatrix(n, z, x)
