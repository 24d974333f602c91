import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kbonacci import (
    OpCount,
    augmented_matrix,
    companion_matrix,
    kbonacci_matrix,
    kbonacci_prefix,
    kbonacci_recurrence,
    partial_sum_direct,
    partial_sum_matrix,
)
from kbonacci.matrix_power import identity_matrix, mat_mul, mat_pow, mat_vec


@pytest.mark.parametrize("k, n, expected", [(2, 4, 5), (3, 0, 1), (5, 2, 2)])
def test_value_examples(k, n, expected):
    assert kbonacci_matrix(k, n) == expected


def test_value_matches_recurrence_at_64():
    assert kbonacci_matrix(2, 64) == kbonacci_recurrence(2, 64)


@pytest.mark.parametrize("k, n, expected", [(2, 4, 12), (5, 0, 1), (3, 7, 96)])
def test_sum_examples(k, n, expected):
    assert partial_sum_matrix(k, n) == expected


def test_cross_engine_grid():
    for k in range(1, 7):
        prefix = kbonacci_prefix(k, 80)
        running = 0
        for n in range(0, 81):
            running += prefix[n]
            assert kbonacci_matrix(k, n) == prefix[n]
            assert partial_sum_matrix(k, n) == running


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("n", [1000, 10_000, 100_000])
def test_large_indices_match_linear_engine(k, n):
    assert kbonacci_matrix(k, n) == kbonacci_recurrence(k, n)


def test_companion_matrix_shape():
    m = companion_matrix(4)
    assert m == [
        [1, 1, 1, 1],
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
    ]


def test_companion_advances_the_state():
    k = 3
    prefix = kbonacci_prefix(k, 10)
    m = companion_matrix(k)
    for n in range(2, 9):
        state = [prefix[n], prefix[n - 1], prefix[n - 2]]
        assert mat_vec(m, state) == [prefix[n + 1], prefix[n], prefix[n - 1]]


def test_augmented_advances_state_and_sum():
    k = 3
    prefix = kbonacci_prefix(k, 10)
    m = augmented_matrix(k)
    for n in range(2, 9):
        state = [sum(prefix[: n + 1]), prefix[n], prefix[n - 1], prefix[n - 2]]
        expected = [sum(prefix[: n + 2]), prefix[n + 1], prefix[n], prefix[n - 1]]
        assert mat_vec(m, state) == expected


def test_power_zero_is_identity():
    m = companion_matrix(3)
    assert mat_pow(m, 0) == identity_matrix(3)


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        mat_pow(companion_matrix(2), -1)


@settings(max_examples=40, deadline=None)
@given(k=st.integers(1, 4), a=st.integers(0, 12), b=st.integers(0, 12))
def test_exponent_additivity(k, a, b):
    m = companion_matrix(k)
    assert mat_pow(m, a + b) == mat_mul(mat_pow(m, a), mat_pow(m, b))


def test_domain_errors():
    with pytest.raises(ValueError):
        kbonacci_matrix(0, 4)
    with pytest.raises(ValueError):
        kbonacci_matrix(2, -1)
    with pytest.raises(ValueError):
        partial_sum_matrix(2, -1)


def test_op_counting_is_logarithmic():
    ops = OpCount()
    kbonacci_matrix(2, 100_000, ops)
    assert ops.matrix_products > 0
    # ~2 log2(n) products of 2x2 matrices, nowhere near the 2n additions
    # the linear engine spends
    assert ops.scalar_mults < 1000


def test_delegates_below_k_without_matrix_work():
    ops = OpCount()
    assert kbonacci_matrix(6, 3, ops) == 4
    assert ops.matrix_products == 0
    ops = OpCount()
    assert partial_sum_matrix(6, 3, ops) == partial_sum_direct(6, 3)
    assert ops.matrix_products == 0
