"""Bit manipulation helpers for binary-expanded indices"""

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.main.app.common.enums.enum import ResponseCode
from src.main.app.exception.domain import TransformException


def is_power_of_two(length: int) -> bool:
    return length > 0 and (length & (length - 1)) == 0


def qubit_count(length: int) -> int:
    """
    Number of bits n such that length == 2^n.

    Raises:
        TransformException: When length is not a power of two.
    """
    if not is_power_of_two(length):
        raise TransformException.of(ResponseCode.NOT_POWER_OF_TWO, f"length={length}")
    return length.bit_length() - 1


def bit(value: ArrayLike, s: int):
    """The coefficient j_s of 2^s in the binary expansion of value."""
    return (value >> s) & 1


def binary_fraction(value: int, n: int) -> float:
    """0.j_0 j_1 ... j_{n-1} = sum_t j_t / 2^(t+1)."""
    return sum(bit(value, t) / float(1 << (t + 1)) for t in range(n))


def bit_reverse(value: int, n: int) -> int:
    """Reverse the n low bits of value."""
    out = 0
    for _ in range(n):
        out = (out << 1) | (value & 1)
        value >>= 1
    return out


def bit_reverse_indices(n: int) -> NDArray[np.int64]:
    """bit_reverse applied to every index of a length-2^n array."""
    idx = np.arange(1 << n, dtype=np.int64)
    rev = np.zeros_like(idx)
    for t in range(n):
        rev |= ((idx >> t) & 1) << (n - 1 - t)
    return rev


def twiddle_exponent(j: ArrayLike, n: int, s: int, top: int):
    """
    The integer (j_s j_{s+1} ... j_top 0 ... 0)_2 with j_s as the most significant of n bits.

    With top = n-1 this is (0.j)·2^(n+s) reduced modulo 2^n, the exponent of ω in a
    butterfly at step s; a smaller top truncates the phase to the bits s..top.

    Args:
        j: Index or array of indices.
        n: Bit width.
        s: Step index, the leading bit.
        top: Last bit taken into account, s <= top <= n-1.

    Returns:
        Exponent of the same shape as j.
    """
    j = np.asarray(j, dtype=np.int64)
    exponent = np.zeros_like(j)
    for t in range(s, top + 1):
        exponent += ((j >> t) & 1) << (n - 1 - (t - s))
    return exponent if exponent.ndim else int(exponent)


def swap_bits_indices(n: int, a: int, b: int) -> NDArray[np.int64]:
    """Every index of a length-2^n array with its bits a and b exchanged."""
    idx = np.arange(1 << n, dtype=np.int64)
    differ = ((idx >> a) ^ (idx >> b)) & 1
    return idx ^ (differ * ((1 << a) | (1 << b)))
