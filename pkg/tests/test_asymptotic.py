"""Tests for asymptotic coefficients, staircase paths, Gregory coefficients,
and the direction-vector combinatorics."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mzv.asymptotic import (
    CompositionPair,
    admissible_n_set,
    as_direction,
    as_shift,
    asym_coeff,
    c_ir,
    c_ir_explicit,
    c_ir_recurrence,
    classify_direction,
    direction_partition_check,
    enumerate_I,
    enumerate_J,
    gregory,
    gregory_bundling_check,
    gregory_origin_check,
    origin_decomposition_check,
    origin_rev_gregory,
    parity_check,
    rev_via_gregory,
    star_coeff_relation_check,
    staircase_direction,
)
from mzv.values import mzf_reg, mzf_rev, mzsf_reg


def test_input_validation():
    with pytest.raises(ValueError):
        as_direction((2,), 2)
    with pytest.raises(ValueError):
        as_direction((0, 0), 2)  # needs depth-1 entries
    with pytest.raises(ValueError):
        as_shift((0, 1), 2)  # partial sums must stay positive
    with pytest.raises(ValueError):
        as_shift((1,), 2)
    assert as_shift((1, Fraction(1, 2)), 2) == (Fraction(1), Fraction(1, 2))
    with pytest.raises(ValueError):
        staircase_direction(0, 2)
    assert staircase_direction(2, 4) == (1, 0, 0)


def test_admissible_sets():
    assert admissible_n_set((0,), ()) == ((1,),)
    assert admissible_n_set((0, 0), (0,)) == ((1, 1), (2, 0))
    assert admissible_n_set((0, 0), (1,)) == ((0, 2),)
    assert admissible_n_set((1, 1), (1,)) == ((0, 4),)


def test_asym_coeff_worked_examples():
    assert asym_coeff((0, 1), (0,), (1, 1)) == Fraction(1, 12)
    assert asym_coeff((0, 1), (1,), (1, 1)) == 0
    assert asym_coeff((1, 1), (0,), (1, 1)) == Fraction(1, 360)
    assert asym_coeff((1, 1), (1,), (1, 1)) == Fraction(1, 720)


def test_asym_coeff_depth_one_is_hurwitz():
    assert asym_coeff((0,), (), (1,)) == Fraction(-1, 2)
    assert asym_coeff((1,), (), (Fraction(1, 2),)) == Fraction(1, 24)


def test_direction_sum_reconstructs_values():
    # summing the coefficients over all directions gives the reverse value,
    # and the all-zero direction alone gives the regular value
    for l in [(0, 1), (1, 1), (0, 0, 1), (1, 0, 2)]:
        r = len(l)
        ones = (1,) * r
        total = Fraction(0)
        for bits in range(1 << (r - 1)):
            d = tuple((bits >> t) & 1 for t in range(r - 1))
            total += asym_coeff(l, d, ones)
        assert total == mzf_rev(l)
        assert asym_coeff(l, (0,) * (r - 1), ones) == mzf_reg(l)
        shifted = (1,) + (0,) * (r - 1)
        assert asym_coeff(l, (0,) * (r - 1), shifted) == mzsf_reg(l)


def test_staircase_paths_agree_on_examples():
    assert c_ir(1, 2, (1, 1), (1, 1)) == Fraction(1, 360)
    assert c_ir(2, 2, (1, 1), (1, 1)) == Fraction(1, 720)
    assert c_ir(1, 2, (0, 0), (1, 1)) == Fraction(1, 3)
    assert c_ir(2, 2, (0, 0), (1, 1)) == Fraction(1, 12)
    assert c_ir(1, 1, (0,), (1,)) == Fraction(-1, 2)
    with pytest.raises(ValueError):
        c_ir(3, 2, (0, 0), (1, 1))
    with pytest.raises(ValueError):
        c_ir(1, 3, (0, 0), (1, 1))


@settings(deadline=None)
@given(
    st.integers(min_value=1, max_value=4),
    st.data(),
)
def test_three_staircase_paths_agree(r, data):
    i = data.draw(st.integers(min_value=1, max_value=r))
    l = tuple(
        data.draw(st.integers(min_value=0, max_value=2), label=f"l{t}")
        for t in range(r)
    )
    a = tuple(
        data.draw(
            st.fractions(
                min_value=Fraction(1, 4), max_value=2, max_denominator=4
            ),
            label=f"a{t}",
        )
        for t in range(r)
    )
    reference = c_ir(i, r, l, a)
    assert c_ir_recurrence(i, r, l, a) == reference
    assert c_ir_explicit(i, r, l, a) == reference


def test_star_relation_examples():
    assert star_coeff_relation_check(2, 2, 1, (1, 1))
    assert star_coeff_relation_check(2, 3, 2, (0, 1, 0))
    assert star_coeff_relation_check(3, 3, 1, (2, 0, 0))
    with pytest.raises(ValueError):
        star_coeff_relation_check(1, 2, 1, (0, 0))  # needs 2 <= i
    with pytest.raises(ValueError):
        star_coeff_relation_check(2, 2, 3, (0, 0))  # p out of range
    with pytest.raises(ValueError):
        star_coeff_relation_check(2, 3, 1, (0, 0))  # wrong depth


def test_star_relation_full_small_grid():
    for r in (2, 3):
        for i in range(2, r + 1):
            for p in range(1, r + 1):
                for bits in range(3**r):
                    l, rest = [], bits
                    for _ in range(r):
                        l.append(rest % 3)
                        rest //= 3
                    if sum(l) > 3:
                        continue
                    assert star_coeff_relation_check(i, r, p, tuple(l))


def test_parity_examples():
    assert parity_check(1, 2, (0, 1), (1, 1))
    assert parity_check(2, 3, (1, 0, 2), (1, Fraction(1, 2), Fraction(1, 3)))
    with pytest.raises(ValueError):
        parity_check(1, 2, (0, 1), (1, 2))  # entries must lie in [0, 1]
    with pytest.raises(ValueError):
        parity_check(0, 2, (0, 1), (1, 1))


def test_gregory_values():
    assert gregory(1, 1) == 1
    assert gregory(1, 2) == Fraction(-1, 2)
    assert gregory(1, 3) == Fraction(1, 3)
    assert gregory(2, 2) == Fraction(1, 12)
    assert gregory(2, 1) == Fraction(-1, 2)
    assert gregory(0, 1) == 0  # the table proper starts at m, n >= 1
    with pytest.raises(ValueError):
        gregory(-1, 1)


def test_gregory_symmetry():
    for m in range(1, 7):
        for n in range(1, 7):
            assert gregory(m, n) == gregory(n, m)


def test_gregory_origin_agreement():
    for r in range(1, 7):
        assert gregory_origin_check(r)


def test_classify_direction_examples():
    assert classify_direction(()) == (0, 0)
    assert classify_direction((0,)) == (0, 0)
    assert classify_direction((1,)) == (0, 1)
    assert classify_direction((0, 1)) == (1, 0)
    assert classify_direction((1, 0)) == (0, 1)
    assert classify_direction((1, 1, 0, 1)) == (1, 2)
    with pytest.raises(ValueError):
        classify_direction((2,))


def test_enumerate_I_examples():
    assert enumerate_I(0, 0, 2) == ((0,),)
    assert enumerate_I(0, 1, 2) == ((1,),)
    assert set(enumerate_I(1, 0, 3)) == {(0, 1)}
    assert set(enumerate_I(0, 1, 3)) == {(1, 0)}
    with pytest.raises(ValueError):
        enumerate_I(2, 0, 3)


def test_enumerate_J_examples():
    assert enumerate_J(0, 0, 1) == (CompositionPair((1,), (1,)),)
    assert enumerate_J(0, 1, 2) == (CompositionPair((2,), (2,)),)
    assert enumerate_J(0, 0, 2) == (CompositionPair((1,), (2,)),)
    assert CompositionPair((1, 2), (2, 2)) in enumerate_J(1, 0, 4)
    for pair in enumerate_J(1, 1, 5):
        assert len(pair.m) == 2
        assert sum(pair.m) == 4
        assert sum(pair.n) == 5
        assert all(mp <= np for mp, np in zip(pair.m, pair.n))
        assert pair.m[0] >= 1 and pair.m[1] >= 2


def test_direction_partition():
    for r in range(1, 7):
        assert direction_partition_check(r)


def test_origin_decomposition_and_bundling():
    for r in range(1, 6):
        assert origin_decomposition_check(r)
        assert gregory_bundling_check(r)


def test_origin_reverse_values_from_gregory():
    assert origin_rev_gregory(1) == Fraction(-1, 2)
    assert origin_rev_gregory(2) == Fraction(5, 12)
    for r in range(1, 7):
        assert origin_rev_gregory(r) == mzf_rev((0,) * r)


def test_rev_via_gregory_examples():
    assert rev_via_gregory((0,)) == Fraction(-1, 2)
    assert rev_via_gregory((0, 0)) == Fraction(5, 12)
    assert rev_via_gregory((1, 1)) == Fraction(1, 240)


@settings(deadline=None)
@given(
    st.lists(st.integers(min_value=0, max_value=3), min_size=1, max_size=3)
)
def test_rev_via_gregory_matches_recurrence(l):
    assert rev_via_gregory(tuple(l)) == mzf_rev(tuple(l))
