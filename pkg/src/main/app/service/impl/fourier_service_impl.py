"""Fourier transform service impl"""

import math
from functools import lru_cache
from typing import Optional

import numpy as np
from loguru import logger
from numpy.typing import ArrayLike

from src.main.app.common.enums.enum import ConstantCode, ResponseCode
from src.main.app.common.util import bit_util
from src.main.app.common.util.matrix_util import SQRT1_2, ComplexMatrix, ComplexVector, as_vector, omega_power
from src.main.app.exception.domain import TransformException
from src.main.app.schema.fourier_schema import ApproximationParam, BitIndex
from src.main.app.service.fourier_service import FourierService


# operators above this width are rebuilt on every call
CACHED_QUBITS = 10


def _operator(n: int, m: int) -> ComplexMatrix:
    """
    Transform matrix whose exponent is the bit-pair sum over n-m <= j+k <= n-1.

    Entry (c, a) is ω^E / √N with E = Σ a_j c_k 2^(j+k); m = n gives the exact DFT.
    The returned array is read-only and may be shared between callers.
    """
    if n <= CACHED_QUBITS:
        return _cached_operator(n, m)
    return _build_operator(n, m)


@lru_cache(maxsize=8)
def _cached_operator(n: int, m: int) -> ComplexMatrix:
    return _build_operator(n, m)


def _build_operator(n: int, m: int) -> ComplexMatrix:
    size = 1 << n
    idx = np.arange(size, dtype=np.int64)
    bits = (idx[:, None] >> np.arange(n, dtype=np.int64)) & 1
    jk = np.add.outer(np.arange(n), np.arange(n))
    weights = np.where((jk >= n - m) & (jk <= n - 1), np.left_shift(1, jk, dtype=np.int64), 0)
    exponent = bits @ weights @ bits.T
    out = omega_power(exponent, size) / np.sqrt(size)
    out.flags.writeable = False
    return out


class FourierServiceImpl(FourierService):
    """
    Reference DFT implementations and the classical radix-2 FFT.
    """

    def dft_direct(self, *, x: ArrayLike) -> ComplexVector:
        """
        Brute-force Y_c = (1/√N) Σ_a X_a ω^(ac).

        Args:
            x: Input array of length 2^n.

        Returns:
            ComplexVector: The transformed array; length-1 inputs come back unchanged.
        """
        x, n = self._split(x)
        if n == 0:
            return x.copy()
        self._check_dense(n)
        return _operator(n, n) @ x

    def dft_approx_direct(self, *, x: ArrayLike, m: int) -> ComplexVector:
        """
        Approximate transform with the bit-pair sum restricted to n-m <= j+k <= n-1.

        Args:
            x: Input array of length 2^n.
            m: Approximation degree, 1 <= m <= n.

        Returns:
            ComplexVector: The transformed array.
        """
        x, n = self._split(x)
        if n == 0:
            return x.copy()
        self._check_dense(n)
        param = ApproximationParam.of(n, m)
        return _operator(n, param.m) @ x

    def dft_matrix(self, *, n: int, m: Optional[int] = None) -> ComplexMatrix:
        """
        Operator form of the exact (m absent) or approximate transform.

        Args:
            n: Number of bits, 1 <= n <= 12.
            m: Optional approximation degree.

        Returns:
            ComplexMatrix: Column a is the transform of basis vector a.
        """
        if n < 1:
            raise TransformException.of(ResponseCode.PARAMETER_ERROR, f"n={n}")
        self._check_dense(n)
        param = ApproximationParam.of(n, n if m is None else m)
        return _operator(n, param.m).copy()

    def phase_error_bound(self, *, n: int, m: int) -> float:
        param = ApproximationParam.of(n, m)
        return 2.0 * math.pi * param.n * 2.0 ** (-param.m)

    def min_m_for_error(self, *, eps_max: float, n: int) -> int:
        """
        Smallest degree whose phase error bound does not exceed eps_max.

        Evaluates ⌈log2(2π/eps_max) + log2 log2 N⌉ and clamps it to [1, n].

        Args:
            eps_max: Admitted phase error, > 0.
            n: Number of bits, >= 1.

        Returns:
            int: The approximation degree m.
        """
        if eps_max <= 0 or n < 1:
            raise TransformException.of(ResponseCode.PARAMETER_ERROR, f"eps_max={eps_max}, n={n}")
        raw = math.log2(2.0 * math.pi / eps_max) + math.log2(n)
        if raw > n:
            return n
        m = min(max(math.ceil(raw), 1), n)
        # floating rounding in the logs can land one below the bound
        while m < n and self.phase_error_bound(n=n, m=m) > eps_max:
            m += 1
        return m

    def fft_classical(self, *, x: ArrayLike) -> ComplexVector:
        """
        Iterative radix-2 FFT: butterfly stages s = n-1 down to 0, then bit-reversal re-ordering.

        Args:
            x: Input array of length 2^n.

        Returns:
            ComplexVector: The DFT of x.
        """
        x, n = self._split(x)
        return self._butterflies(x, n, None)

    def fft_approx_classical(self, *, x: ArrayLike, m: int) -> ComplexVector:
        """
        Classical FFT whose twiddle exponent keeps only bits s..min(s+m-1, n-1).

        Args:
            x: Input array of length 2^n.
            m: Approximation degree, 1 <= m <= n.

        Returns:
            ComplexVector: The approximate transform of x.
        """
        x, n = self._split(x)
        if n == 0:
            return x.copy()
        return self._butterflies(x, n, ApproximationParam.of(n, m))

    def bit_reverse(self, *, v: BitIndex) -> BitIndex:
        return BitIndex(value=bit_util.bit_reverse(v.value, v.n), n=v.n)

    def fft_operation_count(self, *, n: int) -> int:
        if n < 0:
            raise TransformException.of(ResponseCode.PARAMETER_ERROR, f"n={n}")
        return n * (1 << n)

    @staticmethod
    def _check_dense(n: int) -> None:
        if n > ConstantCode.MAX_DENSE_QUBITS:
            raise TransformException.of(ResponseCode.DIMENSION_LIMIT_EXCEEDED, f"n={n} above the dense limit")

    @staticmethod
    def _split(x: ArrayLike):
        x = as_vector(x)
        return x, bit_util.qubit_count(x.shape[0])

    @staticmethod
    def _butterflies(x: ComplexVector, n: int, param: Optional[ApproximationParam]) -> ComplexVector:
        if n == 0:
            return x.copy()
        size = 1 << n
        j = np.arange(size, dtype=np.int64)
        # X^(n) is the input, X^(s) is produced from X^(s+1)
        current = x.copy()
        for s in range(n - 1, -1, -1):
            top = n - 1 if param is None else param.top_bit(s)
            low = j & ~(1 << s)
            high = j | (1 << s)
            twiddle = omega_power(bit_util.twiddle_exponent(j, n, s, top), size)
            current = SQRT1_2 * current[low] + SQRT1_2 * twiddle * current[high]
        logger.debug(f"fft over n={n} bits done, approximation={param}")
        return current[bit_util.bit_reverse_indices(n)]
