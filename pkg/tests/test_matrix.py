"""Exact linear algebra over the rational-function field."""

import random

import pytest

from eaqconv import LaurentPoly, PolyMatrix, RationalPoly


def test_rref_identity_fixed_point():
    m = PolyMatrix.identity(3)
    reduced, pivots = m.rref()
    assert reduced == m
    assert pivots == (0, 1, 2)
    assert m.rank() == 3


def test_rref_dependent_rows():
    m = PolyMatrix.from_entries([["1+D", "D"], ["D+D^2", "D^2"]])
    assert m.rank() == 1


def test_rank_matches_determinant_oracle():
    rng = random.Random(3)
    found_invertible = 0
    for _ in range(40):
        m = PolyMatrix.from_entries(
            [
                [LaurentPoly.from_support({e for e in range(-1, 3) if rng.random() < 0.4}) for _ in range(3)]
                for _ in range(3)
            ]
        )
        det = m.det()  # cofactor expansion, independent of rref
        if det.is_zero():
            assert m.rank() < 3
        else:
            assert m.rank() == 3
            found_invertible += 1
    assert found_invertible >= 5


def test_rref_idempotent():
    m = PolyMatrix.from_entries([["1+D", "1", "0"], ["D", "0", "1"], ["1", "1", "1"]])
    reduced, _ = m.rref()
    assert reduced.rref()[0] == reduced


def test_row_space_equal_swap_and_scaling():
    a = PolyMatrix.from_entries([["1", "D"], ["0", "1+D"]])
    swapped = PolyMatrix.from_entries([["0", "1+D"], ["1", "D"]])
    assert a.row_space_equal(swapped)
    scaled = PolyMatrix.from_entries([["1+D", "0"]])
    unit = PolyMatrix.from_entries([["1", "0"]])
    assert scaled.row_space_equal(unit)
    assert not unit.row_space_equal(PolyMatrix.from_entries([["0", "1"]]))
    assert not a.row_space_equal(unit)


def test_inverse():
    m = PolyMatrix.from_entries([["1", "D"], ["0", "1+D"]])
    inv = m.inverse()
    assert m @ inv == PolyMatrix.identity(2)
    singular = PolyMatrix.from_entries([["1", "D"], ["D", "D^2"]])
    with pytest.raises(ValueError):
        singular.inverse()


def test_matmul_and_transpose():
    a = PolyMatrix.from_entries([["1", "D"]])
    b = PolyMatrix.from_entries([["D"], ["1"]])
    assert (a @ b).rows[0][0] == RationalPoly.zero()  # D + D = 0
    assert a.transpose() == PolyMatrix.from_entries([["1"], ["D"]])
    assert a.transpose().transpose() == a


def test_shape_errors():
    a = PolyMatrix.from_entries([["1", "0"]])
    b = PolyMatrix.from_entries([["1"]])
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        a @ a
    with pytest.raises(ValueError):
        PolyMatrix.from_entries([["1", "0"], ["1"]])
