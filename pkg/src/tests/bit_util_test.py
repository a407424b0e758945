import numpy as np
import pytest

from src.main.app.common.util import bit_util
from src.main.app.exception.domain import TransformException


@pytest.mark.parametrize("length, expected", [(1, 0), (2, 1), (8, 3), (4096, 12)])
def test_qubit_count(length, expected):
    assert bit_util.qubit_count(length) == expected


@pytest.mark.parametrize("length", [0, 3, 6, 12])
def test_qubit_count_rejects_non_powers(length):
    with pytest.raises(TransformException):
        bit_util.qubit_count(length)


@pytest.mark.parametrize(
    "value, n, expected",
    [
        (0, 4, 0),
        (1, 3, 4),
        (6, 4, 6),
        (1, 4, 8),
        (11, 4, 13),
    ],
)
def test_bit_reverse(value, n, expected):
    assert bit_util.bit_reverse(value, n) == expected


def test_bit_reverse_is_involution():
    for n in range(1, 13):
        indices = bit_util.bit_reverse_indices(n)
        assert np.array_equal(indices[indices], np.arange(1 << n))


def test_bit_reverse_indices_match_scalar():
    n = 5
    assert [bit_util.bit_reverse(v, n) for v in range(1 << n)] == bit_util.bit_reverse_indices(n).tolist()


def test_bits_and_binary_fraction():
    # 6 = 110 in binary: j_0 = 0, j_1 = 1, j_2 = 1
    assert [bit_util.bit(6, s) for s in range(3)] == [0, 1, 1]
    # 0.j_0 j_1 j_2 = 0/2 + 1/4 + 1/8
    assert bit_util.binary_fraction(6, 3) == 0.375


def test_twiddle_exponent_is_binary_fraction_scaled():
    n = 4
    for s in range(n):
        for j in range(1 << n):
            expected = round(bit_util.binary_fraction(j >> s, n - s) * (1 << n)) % (1 << n)
            assert bit_util.twiddle_exponent(j, n, s, n - 1) == expected


def test_twiddle_exponent_truncation():
    # bits s..top of 15 with n = 4, s = 0: keep j_0 and j_1 only
    assert bit_util.twiddle_exponent(15, 4, 0, 1) == 8 + 4
    assert bit_util.twiddle_exponent(15, 4, 0, 3) == 15


def test_swap_bits_indices():
    assert bit_util.swap_bits_indices(2, 0, 1).tolist() == [0, 2, 1, 3]
    indices = bit_util.swap_bits_indices(5, 1, 4)
    assert np.array_equal(indices[indices], np.arange(32))
