"""Lower central series, nilindex, Jordan profiles, characteristic sequences."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nilalg import (
    Algebra,
    InvalidInputError,
    NotNilpotentError,
    abelian_algebra,
    chain_algebra,
    char_seq_at,
    characteristic_sequence,
    is_p_filiform,
    lower_central_series,
    nilindex,
    nilpotent_block_profile,
    right_mult_matrix,
)
from nilalg.linalg import zero_vector

from oracles import (
    conjugated_nilpotent,
    jordan_nilpotent,
    lie_family_series_dims,
    random_partition,
)

F = Fraction


# -- lower central series -----------------------------------------------------

def test_series_abelian():
    assert lower_central_series(abelian_algebra(6)).dims == (6, 0)


def test_series_m1(m1_8_4):
    assert lower_central_series(m1_8_4).dims == (8, 5, 2, 1, 0)


def test_series_l12_matches_natural_gradation_oracle(l_12_4):
    expected = lie_family_series_dims(12, 4, (3, 5, 7))
    assert expected == (12, 10, 9, 7, 6, 4, 3, 1, 0)
    assert lower_central_series(l_12_4).dims == expected


def test_series_not_nilpotent_rejected():
    alg = Algebra.from_products(1, ("e1",), {(0, 0): [(0, F(1))]})
    with pytest.raises(NotNilpotentError):
        lower_central_series(alg)


def test_nilindex_examples(m1_8_4):
    assert nilindex(abelian_algebra(4)) == 1
    assert nilindex(m1_8_4) == 4
    for n in (3, 5, 8):
        assert nilindex(chain_algebra(n)) == n


def test_nilindex_equals_series_length_minus_one(grid_algebras):
    for spec, alg in grid_algebras.items():
        dims = lower_central_series(alg).dims
        assert nilindex(alg) == len(dims) - 1, spec.name()


# -- right multiplication operators ---------------------------------------------

def test_right_mult_zero(m1_8_4):
    assert right_mult_matrix(m1_8_4, zero_vector(8)) == \
        tuple(zero_vector(8) for _ in range(8))


def test_right_mult_m4_chain(m4_10_4_0):
    alg = m4_10_4_0
    m = right_mult_matrix(alg, alg.basis_vector(0))  # x = x_1
    for j in range(10):
        col = tuple(m[i][j] for i in range(10))
        if j < 5:  # x_1..x_5 map to the next chain element
            assert col == alg.basis_vector(j + 1)
        else:      # x_6 and all y, z columns vanish
            assert col == zero_vector(10)


def test_right_mult_m3_chain_plus_zeros(m3_9_5):
    alg = m3_9_5
    m = right_mult_matrix(alg, alg.basis_vector(0))  # x = e_1
    for j in range(9):
        col = tuple(m[i][j] for i in range(9))
        if j < 3:
            assert col == alg.basis_vector(j + 1)
        else:
            assert col == zero_vector(9)


def test_right_mult_dimension_mismatch(m1_8_4):
    with pytest.raises(InvalidInputError):
        right_mult_matrix(m1_8_4, zero_vector(5))


# -- Jordan block profiles ---------------------------------------------------

def test_profile_zero_matrix():
    zero3 = tuple(zero_vector(3) for _ in range(3))
    assert nilpotent_block_profile(zero3) == (1, 1, 1)


def test_profile_single_block():
    for k in (1, 2, 5):
        assert nilpotent_block_profile(jordan_nilpotent((k,))) == (k,)


def test_profile_m1_right_mult(m1_8_4):
    m = right_mult_matrix(m1_8_4, m1_8_4.basis_vector(0))
    assert nilpotent_block_profile(m) == (4, 1, 1, 1, 1)


def test_profile_rejects_non_nilpotent():
    from nilalg.linalg import identity
    with pytest.raises(InvalidInputError):
        nilpotent_block_profile(identity(4))


def test_profile_against_constructed_partitions():
    rng = random.Random(4242)
    for _ in range(30):
        n = rng.randint(1, 8)
        part = random_partition(rng, n)
        assert nilpotent_block_profile(conjugated_nilpotent(rng, part)) == part


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=4),
       st.integers(min_value=0, max_value=10 ** 6))
def test_profile_sums_to_dimension(parts, seed):
    part = tuple(sorted(parts, reverse=True))
    m = conjugated_nilpotent(random.Random(seed), part)
    profile = nilpotent_block_profile(m)
    assert sum(profile) == sum(part)
    assert profile == part


# -- characteristic sequences ---------------------------------------------------

def test_char_seq_at_examples(m1_8_4):
    ab = abelian_algebra(4)
    assert char_seq_at(ab, ab.basis_vector(0)).seq == (1, 1, 1, 1)
    assert char_seq_at(m1_8_4, m1_8_4.basis_vector(0)).seq == (4, 1, 1, 1, 1)
    # R_{f_1} sends e_1 to f_3 and kills everything else: one 2-block
    assert char_seq_at(m1_8_4, m1_8_4.basis_vector(4)).seq \
        == (2, 1, 1, 1, 1, 1, 1)


def test_char_seq_at_rejects_l2_members(m1_8_4):
    with pytest.raises(InvalidInputError):
        char_seq_at(m1_8_4, m1_8_4.basis_vector(1))  # e_2 lies in L^2


@settings(max_examples=20, deadline=None)
@given(c=st.fractions(min_value=F(1, 5), max_value=F(5)),
       negate=st.booleans())
def test_char_seq_at_scaling_invariance(m5_10_4, c, negate):
    if negate:
        c = -c
    x = m5_10_4.basis_vector(0)
    cx = tuple(c * v for v in x)
    assert char_seq_at(m5_10_4, x).seq == char_seq_at(m5_10_4, cx).seq


def test_characteristic_sequence_examples(m1_8_4, l_12_4):
    assert characteristic_sequence(abelian_algebra(3)).seq == (1, 1, 1)
    assert characteristic_sequence(m1_8_4).seq == (4, 1, 1, 1, 1)
    assert characteristic_sequence(l_12_4).seq == (8, 1, 1, 1, 1)


def test_characteristic_sequence_rejects_perfect():
    alg = Algebra.from_products(1, ("e1",), {(0, 0): [(0, F(1))]})
    with pytest.raises((InvalidInputError, NotNilpotentError)):
        characteristic_sequence(alg)


def test_characteristic_sequence_sums_to_n(grid_algebras):
    for spec, alg in grid_algebras.items():
        assert sum(characteristic_sequence(alg).seq) == alg.dim, spec.name()


def test_is_p_filiform_examples(m5_10_4):
    assert is_p_filiform(m5_10_4, 4)
    assert not is_p_filiform(abelian_algebra(4), 2)
    with pytest.raises(InvalidInputError):
        is_p_filiform(m5_10_4, 10)


def test_chain_algebra_is_null_filiform():
    # the one-sided chain has R_{e_1} a single size-n Jordan block, so
    # C = (n): 0-filiform; (n-1, 1) would need the antisymmetrized table
    alg = chain_algebra(6)
    assert characteristic_sequence(alg).seq == (6,)
    assert is_p_filiform(alg, 0)
    assert not is_p_filiform(alg, 1)
    lie_chain = Algebra.from_products(
        6, tuple(f"e{i}" for i in range(1, 7)),
        {(i, 0): [(i + 1, F(1))] for i in range(1, 5)}
        | {(0, i): [(i + 1, F(-1))] for i in range(1, 5)})
    assert characteristic_sequence(lie_chain).seq == (5, 1)
    assert is_p_filiform(lie_chain, 1)
