"""Shift-invariant Clifford gates over polynomial stabilizer tableaux.

Qubit addressing: positive integers 1..n are the sender's qubits of each
frame; negative integers -1..-c are the receiver's halves of the c ebits
(printed B1..Bc). In a tableau with receiver columns, column b-1 carries
receiver qubit b and column c+q-1 carries sender qubit q.

Gate semantics act on every row [z|x] of a tableau:

  Hadamard(q)            swap z_q and x_q
  Phase(q, f)            z_q += f(D) x_q, f palindromic (f = f(D^-1));
                         f adds controlled-Z couplings between a qubit and
                         its own frame shifts, f=1 is the plain phase gate
  ControlledZ(q1,q2,f)   z_q1 += f(D) x_q2 and z_q2 += f(D^-1) x_q1
  FiniteCNOT(q1,q2,f)    x_q2 += f(D) x_q1 and z_q1 += f(D^-1) z_q2
  InfiniteCNOT(q, g)     x_q <- x_q / g(D) and z_q <- z_q * g(D^-1); the
                         written rational g = 1/f realises x_q <- f(D) x_q,
                         an infinite-impulse-response filter

Each preserves every shifted symplectic product, so a valid stabilizer
stays valid and stabilizer/logical commutation survives all circuits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .matrix import PolyMatrix, first_row_space_mismatch
from .pauli import CheckMatrix
from .poly import LaurentPoly, RationalPoly
from .symplectic import omega_matrix


@dataclass(frozen=True)
class FiniteCNOT:
    src: int
    dst: int
    f: LaurentPoly

    def __post_init__(self):
        if self.src == self.dst:
            raise ValueError("CNOT needs distinct qubits")
        if self.f.is_zero():
            raise ValueError("CNOT with zero polynomial is a no-op")


@dataclass(frozen=True)
class Hadamard:
    q: int


@dataclass(frozen=True)
class Phase:
    q: int
    f: LaurentPoly = LaurentPoly.one()

    def __post_init__(self):
        if not self.f.is_palindromic():
            raise ValueError("phase polynomial must satisfy f(D) = f(D^-1)")
        if self.f.is_zero():
            raise ValueError("phase gate with zero polynomial is a no-op")


@dataclass(frozen=True)
class ControlledZ:
    q1: int
    q2: int
    f: LaurentPoly = LaurentPoly.one()

    def __post_init__(self):
        if self.q1 == self.q2:
            raise ValueError("controlled-Z needs distinct qubits; use Phase for self-coupling")
        if self.f.is_zero():
            raise ValueError("controlled-Z with zero polynomial is a no-op")


@dataclass(frozen=True)
class InfiniteCNOT:
    q: int
    g: RationalPoly

    def __post_init__(self):
        if self.g.is_zero():
            raise ValueError("infinite-depth gate needs a nonzero rational")
        if self.g.den.is_one() and self.g.num.is_monomial():
            raise ValueError("unit rational would be finite depth; use FiniteCNOT machinery")
        # canonical denominators always carry a constant term, which is the
        # realizability condition for the rational filter
        assert 0 in self.g.den.support


Gate = Union[FiniteCNOT, Hadamard, Phase, ControlledZ, InfiniteCNOT]


@dataclass(frozen=True)
class Circuit:
    """An ordered shift-invariant gate list over n sender qubits per frame
    and c receiver qubits."""

    n: int
    c: int
    gates: tuple[Gate, ...] = ()

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def __len__(self) -> int:
        return len(self.gates)

    def has_infinite_depth(self) -> bool:
        return any(isinstance(g, InfiniteCNOT) for g in self.gates)

    def reversed(self) -> Circuit:
        """The inverse circuit. Every finite-depth gate here is its own
        inverse modulo phases, so reversing the order suffices; an
        infinite-depth gate inverts by inverting its rational."""
        inv = []
        for g in reversed(self.gates):
            if isinstance(g, InfiniteCNOT):
                inv.append(InfiniteCNOT(g.q, g.g.inverse()))
            else:
                inv.append(g)
        return Circuit(self.n, self.c, tuple(inv))

    def without_gate(self, index: int) -> Circuit:
        return Circuit(self.n, self.c, self.gates[:index] + self.gates[index + 1 :])


def col_of_qubit(q: int, c: int) -> int:
    if q >= 1:
        return c + q - 1
    if q <= -1:
        b = -q
        if b > c:
            raise IndexError(f"receiver qubit B{b} out of range (c={c})")
        return b - 1
    raise IndexError("qubit 0 does not exist")


def qubit_label(q: int) -> str:
    return str(q) if q >= 1 else f"B{-q}"


def _apply_gate_rows(
    z_rows: list[list[RationalPoly]],
    x_rows: list[list[RationalPoly]],
    gate: Gate,
    c: int,
    ncols: int,
) -> None:
    if isinstance(gate, Hadamard):
        j = col_of_qubit(gate.q, c)
        if j >= ncols:
            raise IndexError(f"qubit {qubit_label(gate.q)} out of range")
        for zr, xr in zip(z_rows, x_rows):
            zr[j], xr[j] = xr[j], zr[j]
    elif isinstance(gate, Phase):
        j = col_of_qubit(gate.q, c)
        f = RationalPoly(gate.f)
        for zr, xr in zip(z_rows, x_rows):
            if xr[j]:
                zr[j] = zr[j] + f * xr[j]
    elif isinstance(gate, ControlledZ):
        j1 = col_of_qubit(gate.q1, c)
        j2 = col_of_qubit(gate.q2, c)
        f = RationalPoly(gate.f)
        fr = f.reversed_time()
        for zr, xr in zip(z_rows, x_rows):
            a1 = f * xr[j2] if xr[j2] else None
            a2 = fr * xr[j1] if xr[j1] else None
            if a1:
                zr[j1] = zr[j1] + a1
            if a2:
                zr[j2] = zr[j2] + a2
    elif isinstance(gate, FiniteCNOT):
        js = col_of_qubit(gate.src, c)
        jd = col_of_qubit(gate.dst, c)
        f = RationalPoly(gate.f)
        fr = f.reversed_time()
        for zr, xr in zip(z_rows, x_rows):
            if xr[js]:
                xr[jd] = xr[jd] + f * xr[js]
            if zr[jd]:
                zr[js] = zr[js] + fr * zr[jd]
    elif isinstance(gate, InfiniteCNOT):
        j = col_of_qubit(gate.q, c)
        ginv = gate.g.inverse()
        grev = gate.g.reversed_time()
        for zr, xr in zip(z_rows, x_rows):
            if xr[j]:
                xr[j] = xr[j] * ginv
            if zr[j]:
                zr[j] = zr[j] * grev
    else:
        raise TypeError(f"unknown gate {gate!r}")


def apply_gates_to_check(h: CheckMatrix, gates: Iterable[Gate], c: int = 0) -> CheckMatrix:
    """Run gates over a bare check matrix (receiver columns only when c>0)."""
    z_rows = [list(r) for r in h.z.rows]
    x_rows = [list(r) for r in h.x.rows]
    for gate in gates:
        _apply_gate_rows(z_rows, x_rows, gate, c, h.n)
    return CheckMatrix(h.n, PolyMatrix(z_rows), PolyMatrix(x_rows))


@dataclass(frozen=True)
class StabilizerState:
    """A stabilizer matrix paired with the tracked information-qubit
    (logical) matrix, both over c receiver + n sender columns."""

    c: int
    n: int
    stab: CheckMatrix
    logical: CheckMatrix

    @property
    def total_cols(self) -> int:
        return self.c + self.n

    def sender_part(self, which: CheckMatrix | None = None) -> CheckMatrix:
        """Restriction to the sender's n columns."""
        m = self.stab if which is None else which
        cols = range(self.c, self.c + self.n)
        rows = range(m.z.nrows)
        return CheckMatrix(self.n, m.z.submatrix(rows, cols), m.x.submatrix(rows, cols))

    def check_invariant(self) -> None:
        """Stabilizer commutes with itself and with every logical row."""
        full = CheckMatrix(
            self.total_cols,
            self.stab.z.vstack(self.logical.z),
            self.stab.x.vstack(self.logical.x),
        )
        om = omega_matrix(full)
        r = self.stab.r
        for i in range(r):
            for j in range(full.r):
                if not om.rows[i][j].is_zero():
                    raise AssertionError(
                        f"stabilizer row {i + 1} fails to commute with row {j + 1}"
                    )


def apply_gate(state: StabilizerState, gate: Gate) -> StabilizerState:
    return apply_circuit(state, [gate])


def apply_circuit(
    state: StabilizerState, gates: Iterable[Gate], check: bool = False
) -> StabilizerState:
    sz = [list(r) for r in state.stab.z.rows]
    sx = [list(r) for r in state.stab.x.rows]
    lz = [list(r) for r in state.logical.z.rows]
    lx = [list(r) for r in state.logical.x.rows]
    ncols = state.total_cols
    for gate in gates:
        _apply_gate_rows(sz, sx, gate, state.c, ncols)
        _apply_gate_rows(lz, lx, gate, state.c, ncols)
        if check:
            interim = StabilizerState(
                state.c,
                state.n,
                CheckMatrix(ncols, PolyMatrix(sz), PolyMatrix(sx)),
                CheckMatrix(ncols, PolyMatrix(lz), PolyMatrix(lx)),
            )
            interim.check_invariant()
    return StabilizerState(
        state.c,
        state.n,
        CheckMatrix(ncols, PolyMatrix(sz), PolyMatrix(sx)),
        CheckMatrix(ncols, PolyMatrix(lz), PolyMatrix(lx)),
    )


def initial_state(c: int, a: int, k: int, n: int) -> StabilizerState:
    """The unencoded stream: c shared ebit halves, a ancilla qubits and k+c
    information qubits per frame.

    Sender columns are laid out as [a ancillas][c ebit halves][k+c info
    qubits]. Stabilizer rows: the c Z-type ebit rows, the c X-type ebit
    rows, then the a ancilla Z rows. The information-qubit matrix holds the
    k+c logical Z rows then the k+c logical X rows.
    """
    if a + 2 * c + k != n:
        raise ValueError(f"need a+2c+k == n, got {a}+{2 * c}+{k} != {n}")
    total = c + n
    zero, one = RationalPoly.zero(), RationalPoly.one()

    def unit_rows(count: int, cols: Iterable[int]) -> list[list[RationalPoly]]:
        rows = []
        for col in cols:
            row = [zero] * total
            row[col] = one
            rows.append(row)
        return rows

    stab_z: list[list[RationalPoly]] = []
    stab_x: list[list[RationalPoly]] = []
    for i in range(c):  # Z-type ebit rows: Z on B_i and on sender ebit half i
        row = [zero] * total
        row[i] = one
        row[c + a + i] = one
        stab_z.append(row)
        stab_x.append([zero] * total)
    for i in range(c):  # X-type ebit rows
        row = [zero] * total
        row[i] = one
        row[c + a + i] = one
        stab_x.append(row)
        stab_z.append([zero] * total)
    for t in range(a):  # ancilla |0> rows
        row = [zero] * total
        row[c + t] = one
        stab_z.append(row)
        stab_x.append([zero] * total)

    info_cols = range(c + a + c, c + n)
    log_z = unit_rows(k + c, info_cols) + [[zero] * total for _ in range(k + c)]
    log_x = [[zero] * total for _ in range(k + c)] + unit_rows(k + c, info_cols)

    return StabilizerState(
        c,
        n,
        CheckMatrix(total, PolyMatrix(stab_z), PolyMatrix(stab_x)),
        CheckMatrix(total, PolyMatrix(log_z), PolyMatrix(log_x)),
    )


def receiver_augmented(target: CheckMatrix, c: int) -> CheckMatrix:
    """Prepend the receiver's c columns with a unit Z on the first row of
    each ebit pair and a unit X on the second, which cancels each pair's
    unit product. Ancilla rows get zero receiver columns."""
    zero, one = RationalPoly.zero(), RationalPoly.one()
    z_rows, x_rows = [], []
    for i in range(target.r):
        zpad = [zero] * c
        xpad = [zero] * c
        if i < 2 * c:
            if i % 2 == 0:
                zpad[i // 2] = one
            else:
                xpad[i // 2] = one
        zr, xr = target.row(i)
        z_rows.append(zpad + list(zr))
        x_rows.append(xpad + list(xr))
    return CheckMatrix(c + target.n, PolyMatrix(z_rows), PolyMatrix(x_rows))


@dataclass(frozen=True)
class VerifyOutcome:
    ok: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_encoder(
    circuit: Circuit, target: CheckMatrix, c: int, a: int, k: int, check: bool = False
) -> VerifyOutcome:
    """Does the circuit turn the unencoded stream into the target code?

    Passing means (i) the encoded stabilizer still commutes with itself
    over all columns including the receiver's, and (ii) its restriction to
    the sender's qubits spans exactly the target's row space over the
    rational-function field. Receiver-side entries are pinned only up to
    the paired rescalings that ebit bookkeeping leaves free, so they are
    checked through (i) rather than entrywise.
    """
    n = target.n
    try:
        state = initial_state(c, a, k, n)
    except ValueError as exc:
        return VerifyOutcome(False, f"dimension mismatch: {exc}")
    encoded = apply_circuit(state, circuit, check=check)
    om = omega_matrix(encoded.stab)
    for i in range(om.nrows):
        for j in range(om.ncols):
            if not om.rows[i][j].is_zero():
                return VerifyOutcome(
                    False,
                    f"encoded stabilizer rows {i + 1} and {j + 1} anticommute "
                    f"(product {om.rows[i][j]})",
                )
    sender = state.sender_part(encoded.stab)
    mismatch = first_row_space_mismatch(sender.combined(), target.combined())
    if mismatch is not None:
        row, col = mismatch
        side = "Z" if col < n else "X"
        return VerifyOutcome(
            False,
            f"sender row space differs from target at reduced row {row + 1}, "
            f"{side} column {col % n + 1}",
        )
    return VerifyOutcome(True, "encoded stabilizer matches the target code")


def verify_decoder(
    encoder: Circuit,
    decoder: Circuit,
    c: int,
    a: int,
    k: int,
    n: int,
    check: bool = False,
) -> VerifyOutcome:
    """Does decoding after encoding restore the information-qubit matrix?

    Passing means every logical row returns to its unencoded form modulo
    addition of (rational multiples of) rows of the final stabilizer, the
    residue the construction's closing row operations absorb.
    """
    if decoder.has_infinite_depth():
        return VerifyOutcome(False, "decoder contains infinite-depth gates")
    state = initial_state(c, a, k, n)
    out = apply_circuit(
        apply_circuit(state, encoder, check=check), decoder, check=check
    )
    stab_rows = out.stab.combined()
    base, pivots = stab_rows.rref()
    base_rank = len(pivots)
    canon = state.logical.combined()
    got = out.logical.combined()
    for i in range(got.nrows):
        residual = PolyMatrix(
            [[ei + ci for ei, ci in zip(got.rows[i], canon.rows[i])]]
        )
        if residual.is_zero():
            continue
        if base.vstack(residual).rank() != base_rank:
            kind = "Z" if i < k + c else "X"
            return VerifyOutcome(
                False,
                f"logical {kind} row {i % (k + c) + 1} did not return to its "
                "unencoded form modulo the stabilizer",
            )
    return VerifyOutcome(True, "information qubits restored")


def rate_report(k: int, c: int, n: int) -> tuple[Fraction, Fraction]:
    """(information qubits per frame, ebits per frame) as exact fractions."""
    return Fraction(k + c, n), Fraction(c, n)
