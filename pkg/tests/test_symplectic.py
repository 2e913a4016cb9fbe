"""Shifted symplectic products, row operations and expansion."""

import random

import pytest

import demo_code
from eaqconv import (
    AddMultiple,
    CheckMatrix,
    LaurentPoly,
    PolyMatrix,
    RationalPoly,
    ScaleRow,
    SwapRows,
    apply_row_ops,
    binary_to_pauli,
    expand,
    expanded_omega,
    expansion_factor_hint,
    omega_matrix,
    rat,
    shifted_symplectic_product,
)
from eaqconv.errors import RationalEntryError, ZeroScaleError
from eaqconv.symplectic import row_ops_matrix


def _random_check(rng, n_max=4, r_max=3, deg=3) -> CheckMatrix:
    n = rng.randrange(1, n_max + 1)
    r = rng.randrange(1, r_max + 1)

    def rand_entry():
        supp = {e for e in range(deg + 1) if rng.random() < 0.35}
        return RationalPoly(LaurentPoly.from_support(supp))

    z = PolyMatrix([[rand_entry() for _ in range(n)] for _ in range(r)])
    x = PolyMatrix([[rand_entry() for _ in range(n)] for _ in range(r)])
    return CheckMatrix(n, z, x)


def test_self_product_golden():
    h = demo_code.SIMPLE
    assert shifted_symplectic_product(h.row(0), h.row(0)) == rat("D^-1+D")


def test_product_with_zero_row():
    h = CheckMatrix.from_entries([["D", "1"], ["0", "0"]], [["1", "D"], ["0", "0"]])
    assert shifted_symplectic_product(h.row(0), h.row(1)).is_zero()


def test_demo_cross_products():
    h = demo_code.IMPORTED
    assert shifted_symplectic_product(h.row(0), h.row(1)) == rat("D^-1")
    assert shifted_symplectic_product(h.row(1), h.row(0)) == rat("D")


def test_omega_golden_valid_code():
    assert omega_matrix(demo_code.VALID_CODE).is_zero()


def test_omega_golden_demo():
    assert omega_matrix(demo_code.IMPORTED) == demo_code.OMEGA
    assert omega_matrix(demo_code.SIMPLE_TWO_EXPANDED) == PolyMatrix.from_entries(
        [["0", "1+D^-1"], ["1+D", "0"]]
    )


def test_omega_symmetry_random():
    rng = random.Random(21)
    for _ in range(50):
        om = omega_matrix(_random_check(rng))
        assert om == om.transpose().reversed_time()


def test_apply_row_ops_golden():
    # scaling the second generator of the two-expanded simple code turns
    # its product matrix into the single antidiagonal block
    ops = (ScaleRow(1, rat("(1)/(1+D)")),)
    out = apply_row_ops(demo_code.SIMPLE_TWO_EXPANDED, ops)
    assert omega_matrix(out) == PolyMatrix.from_entries([["0", "1"], ["1", "0"]])
    assert out == demo_code.SIMPLE_STD


def test_apply_row_ops_empty_and_errors():
    h = demo_code.IMPORTED
    assert apply_row_ops(h, ()) == h
    with pytest.raises(ZeroScaleError):
        apply_row_ops(h, (ScaleRow(0, RationalPoly.zero()),))


def test_row_op_covariance_random():
    # omega(R H) = R omega(H) R^T(D^-1), both sides computed independently
    rng = random.Random(22)
    for _ in range(40):
        h = _random_check(rng)
        r = h.r
        ops = []
        for _ in range(rng.randrange(1, 5)):
            kind = rng.randrange(3)
            i = rng.randrange(r)
            j = rng.randrange(r)
            c = RationalPoly(
                LaurentPoly.from_support({e for e in range(-1, 2) if rng.random() < 0.5} or {0})
            )
            if kind == 0:
                ops.append(SwapRows(i, j))
            elif kind == 1:
                ops.append(ScaleRow(i, c))
            elif i != j:
                ops.append(AddMultiple(i, j, c))
        lhs = omega_matrix(apply_row_ops(h, ops))
        rmat = row_ops_matrix(ops, r)
        rhs = rmat @ omega_matrix(h) @ rmat.reversed_time().transpose()
        assert lhs == rhs


def test_row_space_preserved_by_row_ops():
    h = demo_code.IMPORTED
    ops = (ScaleRow(1, rat("1+D")), AddMultiple(0, 1, rat("D^-1")))
    assert apply_row_ops(h, ops).row_space_equal(h)


def test_expand_golden_simple():
    assert expand(demo_code.SIMPLE, 2) == demo_code.SIMPLE_TWO_EXPANDED
    assert expand(demo_code.SIMPLE, 3) == demo_code.SIMPLE_THREE_EXPANDED


def test_expand_golden_demo():
    assert expand(demo_code.IMPORTED, 2) == demo_code.EXPANDED


def test_expand_identity_and_errors():
    h = demo_code.IMPORTED
    assert expand(h, 1) == h
    with pytest.raises(ValueError):
        expand(h, 0)
    with pytest.raises(RationalEntryError):
        expand(demo_code.SIMPLE_STD, 2)


def test_expanded_omega_golden():
    assert expanded_omega(omega_matrix(demo_code.SIMPLE), 2) == PolyMatrix.from_entries(
        [["0", "1+D^-1"], ["1+D", "0"]]
    )
    assert expanded_omega(demo_code.OMEGA, 2) == demo_code.OMEGA_EXPANDED
    assert expanded_omega(demo_code.OMEGA, 1) == demo_code.OMEGA


def test_expansion_routes_agree_random():
    # the two independent routes to the expanded product matrix agree
    rng = random.Random(23)
    for _ in range(200):
        h = _random_check(rng)
        l = rng.choice([2, 3, 4])
        assert expanded_omega(omega_matrix(h), l) == omega_matrix(expand(h, l))


def _pauli_commutation_oracle(h: CheckMatrix, window: int = 8) -> bool:
    """Truncated letter-level commutation check: unroll the generators over
    a frame window and count anticommuting letter pairs for every relative
    shift."""
    seqs = binary_to_pauli(h)

    def letter(seq, frame, q):
        idx = frame - seq.start_offset
        if 0 <= idx < len(seq.frames):
            return seq.frames[idx][q]
        return "I"

    for s1 in seqs:
        for s2 in seqs:
            for shift in range(-window, window + 1):
                anti = 0
                for frame in range(-window, 2 * window):
                    for q in range(h.n):
                        l1 = letter(s1, frame, q)
                        l2 = letter(s2, frame - shift, q)
                        if l1 != "I" and l2 != "I" and l1 != l2:
                            anti ^= 1
                if anti:
                    return False
    return True


def test_omega_zero_iff_all_shifts_commute():
    rng = random.Random(24)
    seen_valid = seen_invalid = 0
    for _ in range(60):
        h = _random_check(rng, n_max=3, r_max=2, deg=2)
        is_valid = omega_matrix(h).is_zero()
        assert is_valid == _pauli_commutation_oracle(h)
        seen_valid += is_valid
        seen_invalid += not is_valid
    assert demo_code.VALID_CODE.n == 3 and _pauli_commutation_oracle(demo_code.VALID_CODE)
    assert seen_invalid > 0


def test_expansion_factor_hint():
    assert expansion_factor_hint(demo_code.SIMPLE) == 2
    assert expansion_factor_hint(demo_code.IMPORTED) is None  # two generators
    assert expansion_factor_hint(demo_code.VALID_CODE) is None  # already valid
