"""Encoder and decoder synthesis for standard-form generator sets.

The derivation runs the construction forward: finite-depth gates reduce
the a ancilla generators to single Z operators on the first a qubits,
then reduce the c leading pair rows to X-only operators with a lower
triangular coefficient block L on the next c qubits, and Hadamards on
those qubits finish the canonical shape. Free row operations (generator
rebookkeeping, never gates) tidy the matrix between gate stages; gates
and row operations commute, so the recorded gate list alone carries all
the physics.

The emitted encoder starts from the unencoded stream and plays the
canonical-shape encoding first (CNOT fans for the numerator matrices, a
Hadamard layer, then one infinite-depth filter per nontrivial row
denominator), followed by the derivation's finite-depth gates in reverse
order. The decoder replays the forward finite-depth gates and undoes the
canonical encoding from the receiver's halves, using finite-depth gates
only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuit import (
    Circuit,
    ControlledZ,
    FiniteCNOT,
    Gate,
    Hadamard,
    InfiniteCNOT,
    Phase,
    apply_gates_to_check,
)
from .errors import ReductionFailureError
from .gram_schmidt import GSResult, standard_form_check
from .matrix import PolyMatrix
from .pauli import CheckMatrix
from .poly import LaurentPoly, RationalPoly
from .symplectic import omega_matrix


class _Worker:
    """Mutable sender-only tableau that applies gates as they are emitted."""

    def __init__(self, h: CheckMatrix):
        self.n = h.n
        self.z = [list(r) for r in h.z.rows]
        self.x = [list(r) for r in h.x.rows]
        self.gates: list[Gate] = []

    def emit(self, gate: Gate) -> None:
        self.gates.append(gate)
        m = apply_gates_to_check(self.matrix(), [gate], c=0)
        self.z = [list(r) for r in m.z.rows]
        self.x = [list(r) for r in m.x.rows]

    def matrix(self) -> CheckMatrix:
        return CheckMatrix(self.n, PolyMatrix(self.z), PolyMatrix(self.x))


def _row_lcm_den(w: _Worker, r: int, cols: list[int]) -> LaurentPoly:
    lcm = LaurentPoly.one()
    for side in (w.z, w.x):
        for j in cols:
            den = side[r][j].den
            if not den.is_one():
                lcm = lcm.exact_div(lcm.gcd(den)) * den
    return lcm


def _single_qubit_reduce(w: _Worker, r: int, col: int, z_target: bool) -> None:
    """Collapse a mixed (z, x) pair on one qubit with palindromic-quotient
    division; self-commutation keeps both polynomials centred together, so
    each step strictly shrinks a span and the loop terminates."""
    q = col + 1
    delta = _row_lcm_den(w, r, [col])
    scale = RationalPoly(delta)

    def nums() -> tuple[LaurentPoly, LaurentPoly]:
        return (w.z[r][col] * scale).as_laurent(), (w.x[r][col] * scale).as_laurent()

    while True:
        pz, px = nums()
        if pz.is_zero() and px.is_zero():
            raise ReductionFailureError(f"generator {r + 1} vanished during reduction")
        if pz.is_zero() or px.is_zero():
            break
        span_z = pz.max_exp - pz.min_exp
        span_x = px.max_exp - px.min_exp
        if span_z >= span_x:
            s = pz.max_exp - px.max_exp
            f = LaurentPoly.from_support({s, -s})
            w.emit(Phase(q, f))
        else:
            w.emit(Hadamard(q))
    pz, px = nums()
    if z_target and pz.is_zero():
        w.emit(Hadamard(q))
    elif not z_target and px.is_zero():
        w.emit(Hadamard(q))


def _euclid_concentrate_x(w: _Worker, r: int, avail: list[int], pivot: int) -> None:
    """CNOT the row's x entries into a single entry at the pivot column."""
    delta = _row_lcm_den(w, r, avail)
    scale = RationalPoly(delta)

    def num(j: int) -> LaurentPoly:
        return (w.x[r][j] * scale).as_laurent()

    while True:
        live = [j for j in avail if w.x[r][j]]
        if live == [pivot]:
            return
        if not live:
            raise ReductionFailureError("no x entry left to concentrate")
        if len(live) == 1:
            j = live[0]
            w.emit(FiniteCNOT(j + 1, pivot + 1, LaurentPoly.one()))
            w.emit(FiniteCNOT(pivot + 1, j + 1, LaurentPoly.one()))
            continue
        live.sort(key=lambda j: (num(j).mask.bit_length(), j))
        a, b = live[0], live[1]
        quot = num(b).divmod(num(a))[0]
        if quot.is_zero():
            # same mask degree; a single subtraction still shrinks b
            quot = LaurentPoly.D(num(b).min_exp - num(a).min_exp)
        w.emit(FiniteCNOT(a + 1, b + 1, quot))


def _reduce_row(w: _Worker, r: int, avail: list[int], pivot: int, z_target: bool) -> None:
    """Turn row r, within the available columns, into a single-sided single
    operator at the pivot column using finite-depth gates only."""
    others = [j for j in avail if j != pivot]
    side, other_side = (w.z, w.x) if z_target else (w.x, w.z)
    if (
        side[r][pivot]
        and all(not side[r][j] for j in others)
        and all(not other_side[r][j] for j in avail)
    ):
        return
    if len(avail) == 1:
        _single_qubit_reduce(w, r, pivot, z_target)
        return

    while True:
        if all(not w.x[r][j] for j in avail):
            zs = [j for j in avail if w.z[r][j]]
            if not zs:
                raise ReductionFailureError(
                    f"generator {r + 1} has no support on the remaining qubits "
                    "(rank deficiency)"
                )
            for j in zs:
                w.emit(Hadamard(j + 1))
            continue
        _euclid_concentrate_x(w, r, avail, pivot)
        delta = _row_lcm_den(w, r, avail)
        scale = RationalPoly(delta)
        g = (w.x[r][pivot] * scale).as_laurent()
        bad = next(
            (
                j
                for j in avail
                if w.z[r][j] and not g.divides((w.z[r][j] * scale).as_laurent())
            ),
            None,
        )
        if bad is None:
            break
        if bad == pivot:
            helper = others[0]
            # park the stubborn z part on a helper column, then fold it in
            w.emit(FiniteCNOT(helper + 1, pivot + 1, LaurentPoly.one()))
            bad = helper
        w.emit(Hadamard(bad + 1))

    # clear the z side against the concentrated x entry
    delta = _row_lcm_den(w, r, avail)
    scale = RationalPoly(delta)
    g = (w.x[r][pivot] * scale).as_laurent()
    for j in others:
        if w.z[r][j]:
            f = (w.z[r][j] * scale).as_laurent().exact_div(g)
            w.emit(ControlledZ(j + 1, pivot + 1, f))
    if w.z[r][pivot]:
        alpha = (w.z[r][pivot] * scale).as_laurent().exact_div(g)
        if not alpha.is_palindromic():
            raise ReductionFailureError(
                f"generator {r + 1} violates self-commutation during reduction"
            )
        w.emit(Phase(pivot + 1, alpha))
    assert all(not w.z[r][j] for j in avail)
    assert all(not w.x[r][j] for j in others)
    if z_target:
        w.emit(Hadamard(pivot + 1))


def _assert_block_pattern(ok: bool, what: str) -> None:
    if not ok:
        raise ReductionFailureError(f"reduction missed its target shape: {what}")


def ancilla_block_reduce(h: CheckMatrix, c: int, a: int) -> tuple[Circuit, CheckMatrix]:
    """Finite-depth gates that pin the last a generators to single Z
    operators on the first a qubits.

    Returns the gate list and the tidied matrix in which those generators
    are unit Z rows and the leading 2c rows carry nothing on the pinned
    qubits. The tidying applies free row operations (and the subcode step
    that drops row scalings), so the gate replay reproduces the returned
    matrix up to row space, which is the equivalence every consumer uses.
    """
    if standard_form_check(omega_matrix(h)) != (c, a):
        raise ValueError("input products are not in standard form")
    if h.r != 2 * c + a:
        raise ValueError("row count disagrees with (c, a)")
    w = _Worker(h)
    n = h.n
    for t in range(a):
        _reduce_row(w, 2 * c + t, avail=list(range(t, n)), pivot=t, z_target=True)
    zero, one = RationalPoly.zero(), RationalPoly.one()
    # gate-level shape: ancilla block is lower triangular on the pinned
    # columns with nothing on the x side, pairs have no x there either
    for t in range(a):
        row = 2 * c + t
        _assert_block_pattern(bool(w.z[row][t]), f"ancilla {t + 1} pivot vanished")
        _assert_block_pattern(
            all(not w.x[row][j] for j in range(n)), f"ancilla {t + 1} kept x entries"
        )
        _assert_block_pattern(
            all(not w.z[row][j] for j in range(t + 1, n)),
            f"ancilla {t + 1} kept z entries beyond its pivot",
        )
    for i in range(2 * c):
        _assert_block_pattern(
            all(not w.x[i][t] for t in range(a)),
            f"pair row {i + 1} kept x entries on ancilla qubits",
        )
    # free row operations: diagonalise the ancilla block, take the unit
    # subcode, and cancel the pair rows' z entries on the pinned columns
    for i in range(2 * c):
        for t in range(a):
            w.z[i][t] = zero
    for t in range(a):
        row = 2 * c + t
        w.z[row] = [one if j == t else zero for j in range(n)]
        w.x[row] = [zero] * n
    return Circuit(n=n, c=c, gates=tuple(w.gates)), w.matrix()


@dataclass(frozen=True)
class EncoderPlan:
    """Intermediate matrices of the synthesis, kept for verification and
    for building the matching decoder."""

    c: int
    a: int
    k: int
    n: int
    perm: tuple[int, ...]
    l_mat: PolyMatrix
    u_mat: PolyMatrix
    x1: PolyMatrix
    z2: PolyMatrix
    x2: PolyMatrix
    gamma: tuple[LaurentPoly, ...]
    z2n: PolyMatrix
    x2n: PolyMatrix
    a_mat: PolyMatrix
    b_mat: PolyMatrix
    finite_gates: tuple[Gate, ...]

    @property
    def ancilla_qubits(self) -> range:
        return range(1, self.a + 1)

    @property
    def pair_qubits(self) -> range:
        return range(self.a + 1, self.a + self.c + 1)

    @property
    def info_qubits(self) -> range:
        return range(self.a + self.c + 1, self.n + 1)


def ebit_block_reduce(h: CheckMatrix, c: int) -> tuple[Circuit, EncoderPlan, CheckMatrix]:
    """Reduce the leading 2c pair rows to the canonical encoded shape.

    Expects the ancilla-reduced matrix. Gates turn the first row of each
    pair into an X-only operator pinned to one of the c dedicated qubits
    (lower triangular block L); the mutual products then force the partner
    rows' Z block to the matching upper triangular U with
    u_ii(D) = 1/l_ii(D^-1). Free row operations normalise both blocks to
    the identity and a closing Hadamard layer yields the canonical form
    [[I,0|0,0],[X1,Z2|I,X2]] over the pair and information columns.
    """
    n = h.n
    a = h.r - 2 * c
    k = n - h.r
    if a < 0:
        raise ValueError("more pair rows than generators")
    w = _Worker(h)
    perm = tuple(range(0, 2 * c, 2)) + tuple(range(1, 2 * c, 2)) + tuple(
        range(2 * c, h.r)
    )
    w.z = [w.z[i] for i in perm]
    w.x = [w.x[i] for i in perm]
    pair_cols = list(range(a, a + c))
    for i in range(c):
        _reduce_row(w, i, avail=list(range(a + i, n)), pivot=a + i, z_target=False)

    rp = RationalPoly
    l_mat = PolyMatrix([[w.x[i][j] for j in pair_cols] for i in range(c)])
    u_mat = PolyMatrix([[w.z[c + i][j] for j in pair_cols] for i in range(c)])
    for i in range(c):
        _assert_block_pattern(bool(l_mat.rows[i][i]), f"pair {i + 1} lost its pivot")
        _assert_block_pattern(
            all(not l_mat.rows[i][j] for j in range(i + 1, c)),
            "L block is not lower triangular",
        )
        _assert_block_pattern(
            all(not u_mat.rows[i][j] for j in range(i)),
            "U block is not upper triangular",
        )
        prod = u_mat.rows[i][i] * l_mat.rows[i][i].reversed_time()
        _assert_block_pattern(prod.is_one(), "diagonal duality u_ii * l_ii(D^-1) = 1")

    # free row operations on a combined view: L^-1 and U^-1 normalise the
    # two row groups, which preserves the pair products exactly
    combined = PolyMatrix([wz + wx for wz, wx in zip(w.z, w.x)])
    firsts = PolyMatrix(combined.rows[:c])
    seconds = PolyMatrix(combined.rows[c : 2 * c])
    firsts = l_mat.inverse() @ firsts
    seconds = u_mat.inverse() @ seconds
    rows = list(firsts.rows) + list(seconds.rows) + list(combined.rows[2 * c :])
    z_rows = [list(row[:n]) for row in rows]
    x_rows = [list(row[n:]) for row in rows]
    zero = rp.zero()
    for i in range(2 * c):  # cancel leftovers against the unit ancilla rows
        for t in range(a):
            z_rows[i][t] = zero

    info_cols = list(range(a + c, n))
    for i in range(c):
        _assert_block_pattern(
            all(not z_rows[i][j] for j in range(n)), "top rows kept z entries"
        )
        _assert_block_pattern(
            all(not x_rows[i][j] for j in info_cols), "top rows kept info x entries"
        )
    x1 = PolyMatrix([[x_rows[c + i][j] for j in pair_cols] for i in range(c)])
    z2 = PolyMatrix([[z_rows[c + i][j] for j in info_cols] for i in range(c)])
    x2 = PolyMatrix([[x_rows[c + i][j] for j in info_cols] for i in range(c)])

    gamma = []
    for i in range(c):
        lcm = LaurentPoly.one()
        for e in list(z2.rows[i]) + list(x2.rows[i]):
            if not e.den.is_one():
                lcm = lcm.exact_div(lcm.gcd(e.den)) * e.den
        gamma.append(lcm)
    z2n = PolyMatrix(
        [[e * rp(gamma[i]) for e in z2.rows[i]] for i in range(c)]
    )
    x2n = PolyMatrix(
        [[e * rp(gamma[i]) for e in x2.rows[i]] for i in range(c)]
    )
    a_mat = z2n @ x2n.reversed_time().transpose()
    b_mat = z2n @ x2n.reversed_time().transpose()

    # the closing Hadamard layer on the pair qubits, mirrored onto the
    # tidied rows as the same column swap
    for i in range(c):
        w.emit(Hadamard(a + i + 1))
    for col in pair_cols:
        for i in range(len(z_rows)):
            z_rows[i][col], x_rows[i][col] = x_rows[i][col], z_rows[i][col]

    desired = CheckMatrix(n, PolyMatrix(z_rows), PolyMatrix(x_rows))
    plan = EncoderPlan(
        c=c,
        a=a,
        k=k,
        n=n,
        perm=perm,
        l_mat=l_mat,
        u_mat=u_mat,
        x1=x1,
        z2=z2,
        x2=x2,
        gamma=tuple(gamma),
        z2n=z2n,
        x2n=x2n,
        a_mat=a_mat,
        b_mat=b_mat,
        finite_gates=tuple(w.gates),
    )
    return Circuit(n=n, c=c, gates=tuple(w.gates)), plan, desired


def synthesize_encoder(gs: GSResult) -> tuple[Circuit, EncoderPlan]:
    """An online encoding circuit for a standard-form generator set.

    Layout: canonical-shape encoding first (CNOT fans for the Z-side
    numerators from each ebit half to the information qubits, Hadamards on
    the information qubits, CNOT fans for the X-side numerators, then one
    infinite-depth filter per nontrivial row denominator), followed by the
    reversed finite-depth derivation gates.
    """
    anc_circ, m1 = ancilla_block_reduce(gs.h_std, gs.c, gs.a)
    ebit_circ, plan, _ = ebit_block_reduce(m1, gs.c)
    plan = EncoderPlan(
        **{
            **{f: getattr(plan, f) for f in plan.__dataclass_fields__},
            "finite_gates": tuple(anc_circ.gates) + tuple(ebit_circ.gates),
        }
    )
    gates: list[Gate] = []
    c, k = gs.c, gs.k
    pairq = list(plan.pair_qubits)
    infoq = list(plan.info_qubits)
    for i in range(c):
        for j in range(k + c):
            f = plan.z2n.rows[i][j]
            if f:
                gates.append(FiniteCNOT(pairq[i], infoq[j], f.as_laurent()))
    # Hadamards only where the Z-side numerators put weight; on a zero
    # column the gate would not touch the stabilizer at this point, and the
    # decoder skips the same columns so the logical flow stays paired
    active = _active_info_columns(plan)
    gates.extend(Hadamard(infoq[j]) for j in active)
    for i in range(c):
        for j in range(k + c):
            f = plan.x2n.rows[i][j]
            if f:
                gates.append(FiniteCNOT(pairq[i], infoq[j], f.as_laurent()))
    for i in range(c):
        if not plan.gamma[i].is_one():
            gates.append(InfiniteCNOT(pairq[i], RationalPoly(LaurentPoly.one(), plan.gamma[i])))
    gates.extend(reversed(plan.finite_gates))
    return Circuit(n=gs.n, c=c, gates=tuple(gates)), plan


def _active_info_columns(plan: EncoderPlan) -> list[int]:
    return [
        j
        for j in range(plan.k + plan.c)
        if any(plan.z2n.rows[i][j] for i in range(plan.c))
    ]


def synthesize_decoder(gs: GSResult, plan: EncoderPlan) -> Circuit:
    """The matching finite-depth-only decoding circuit: forward derivation
    gates, then the canonical encoding undone from the receiver's halves."""
    gates: list[Gate] = list(plan.finite_gates)
    c, k = plan.c, plan.k
    infoq = list(plan.info_qubits)
    for i in range(c):
        for j in range(k + c):
            f = plan.x2n.rows[i][j]
            if f:
                gates.append(FiniteCNOT(-(i + 1), infoq[j], f.as_laurent()))
    gates.extend(Hadamard(infoq[j]) for j in _active_info_columns(plan))
    for i in range(c):
        for j in range(k + c):
            f = plan.z2n.rows[i][j]
            if f:
                gates.append(FiniteCNOT(-(i + 1), infoq[j], f.as_laurent()))
    circ = Circuit(n=plan.n, c=c, gates=tuple(gates))
    assert not circ.has_infinite_depth()
    return circ
