"""Recovering level and fall weights from the head of a counting sequence."""

from __future__ import annotations

from fractions import Fraction

import pytest

from motzkinperm.invert import (
    RecoveryStatus,
    classify_weights,
    invert_jfraction,
    regenerate,
)
from motzkinperm.sequences import (
    baxter_numbers,
    bell_numbers,
    catalan_numbers,
    factorials,
    motzkin_numbers,
)


def test_factorial_prefix_recovers_square_and_odd_weights():
    rec = invert_jfraction(factorials(7))
    assert rec.status is RecoveryStatus.COMPLETE
    assert rec.ell[:3] == (1, 3, 5)
    assert rec.dee[:3] == (1, 4, 9)


def test_catalan_prefix_recovers_its_weights():
    rec = invert_jfraction(catalan_numbers(6))
    assert rec.status is RecoveryStatus.COMPLETE
    assert rec.ell[0] == 1
    assert all(l == 2 for l in rec.ell[1:])
    assert all(d == 1 for d in rec.dee)


def test_motzkin_prefix_recovers_unit_weights():
    rec = invert_jfraction(motzkin_numbers(6))
    assert all(l == 1 for l in rec.ell)
    assert all(d == 1 for d in rec.dee)


def test_bell_prefix_recovers_ramp_weights():
    rec = invert_jfraction(bell_numbers(6))
    assert rec.ell == (1, 2, 3)
    assert rec.dee == (1, 2, 3)
    assert classify_weights(rec) == "nonnegative-integers"


def test_determined_counts_follow_the_triangular_structure():
    for m in range(1, 13):
        rec = invert_jfraction(factorials(m))
        assert len(rec.ell) == (m + 1) // 2
        assert len(rec.dee) == m // 2


def test_constant_series_terminates():
    rec = invert_jfraction([1, 0, 0, 0])
    assert rec.status is RecoveryStatus.TERMINATED
    assert rec.ell[0] == 0
    assert rec.dee == ()
    assert regenerate(rec, 6) == [1, 0, 0, 0, 0, 0, 0]


def test_geometric_series_terminates():
    rec = invert_jfraction([1, 2, 4, 8, 16, 32])
    assert rec.status is RecoveryStatus.TERMINATED
    assert rec.ell == (2,)
    assert rec.dee == ()
    assert regenerate(rec, 7) == [1, 2, 4, 8, 16, 32, 64, 128]


def test_zero_fall_with_nonzero_tail_fails():
    rec = invert_jfraction([1, 0, 0, 1])
    assert rec.status is RecoveryStatus.FAILED
    with pytest.raises(ValueError):
        regenerate(rec)
    # a failed recovery still reports what it determined on the way
    assert rec.ell[0] == 0


def test_regeneration_reproduces_the_input_exactly():
    for seq in (factorials(9), catalan_numbers(9), bell_numbers(9)):
        rec = invert_jfraction(seq)
        assert rec.status is RecoveryStatus.COMPLETE
        assert regenerate(rec) == seq


def test_complete_recovery_refuses_to_extrapolate():
    rec = invert_jfraction(factorials(5))
    with pytest.raises(ValueError):
        regenerate(rec, 6)
    assert regenerate(rec, 5) == factorials(5)
    assert regenerate(rec, 2) == factorials(2)


def test_rejects_bad_heads():
    with pytest.raises(ValueError):
        invert_jfraction([])
    with pytest.raises(ValueError):
        invert_jfraction([2, 1, 1])


def test_fractional_input_is_supported():
    rec = invert_jfraction([1, Fraction(1, 2), Fraction(1, 2), Fraction(5, 8)])
    assert rec.status is RecoveryStatus.COMPLETE
    assert rec.ell[0] == Fraction(1, 2)
    assert rec.dee[0] == Fraction(1, 4)
    assert classify_weights(rec) == "positive-rationals"
    assert regenerate(rec) == [1, Fraction(1, 2), Fraction(1, 2), Fraction(5, 8)]


def test_baxter_weights_are_not_a_colored_path_census():
    rec = invert_jfraction(baxter_numbers(12))
    assert rec.status is RecoveryStatus.COMPLETE
    assert classify_weights(rec) == "negative-or-fractional"


def test_weight_accessors_zero_pad():
    rec = invert_jfraction(bell_numbers(6))
    assert rec.level_weight(0) == 1
    assert rec.level_weight(2) == 3
    assert rec.level_weight(99) == 0
    assert rec.fall_weight(1) == 1
    assert rec.fall_weight(99) == 0
    assert rec.fall_weight(0) == 0
