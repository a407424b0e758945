"""Step matrix service impl"""

from typing import Optional

import numpy as np
from loguru import logger
from numpy.typing import ArrayLike

from src.main.app.common.enums.enum import ConstantCode, ResponseCode
from src.main.app.common.util import bit_util
from src.main.app.common.util.matrix_util import (
    HADAMARD,
    IDENTITY_2,
    SQRT1_2,
    ComplexMatrix,
    ComplexVector,
    as_matrix,
    kron_chain,
    matmul,
    matmul_chain,
    max_entry_distance,
    omega_power,
    permutation_matrix,
)
from src.main.app.exception.domain import StepMatrixException
from src.main.app.schema.fourier_schema import ApproximationParam
from src.main.app.schema.step_schema import StepDecomposition
from src.main.app.service.step_matrix_service import StepMatrixService


class StepMatrixServiceImpl(StepMatrixService):
    """
    Builds the per-step matrices of the radix-2 FFT and their factorization into
    Hadamard and controlled-phase pieces.
    """

    def __init__(self, strict_tolerance: float = 1e-12):
        """
        Initialize the StepMatrixServiceImpl instance.

        Args:
            strict_tolerance (float): Tolerance of the structural checks in qr_decompose_step.
        """
        self.strict_tolerance = strict_tolerance

    def build_p(self, *, n: int, s: int) -> ComplexMatrix:
        """
        Step matrix P^(s): X^(s) = P^(s) X^(s+1).

        Row j has exactly two nonzero entries: the diagonal ω^(j_s·e)/√2 and either the
        lower subdiagonal 1/√2 (j_s = 1) or the upper subdiagonal ω^e/√2 (j_s = 0), where
        e = (0.j)·2^(n+s) reduced modulo 2^n.

        Args:
            n: Number of bits, 1 <= n <= 12.
            s: Step index, 0 <= s < n.

        Returns:
            ComplexMatrix: The 2^n x 2^n step matrix.
        """
        size, j, js = self._indices(n, s)
        exponent = bit_util.twiddle_exponent(j, n, s, n - 1)
        out = np.zeros((size, size), dtype=np.complex128)
        out[j, j] = SQRT1_2 * omega_power(js * exponent, size)
        lower = j[js == 1]
        out[lower, lower - (1 << s)] = SQRT1_2
        upper = j[js == 0]
        out[upper, upper + (1 << s)] = SQRT1_2 * omega_power(exponent[js == 0], size)
        return out

    def build_alpha(self, *, n: int, s: int) -> ComplexVector:
        """
        Column scaling α_k = (-1)^⌊k/2^s⌋ ω^(2^n - k_s·(0.k)·2^(n+s)).

        The 2^n term is a full turn and vanishes after reduction.
        """
        size, k, ks = self._indices(n, s)
        exponent = bit_util.twiddle_exponent(k, n, s, n - 1)
        # (-1)^⌊k/2^s⌋ only depends on the parity k_s; -1 is ω^(N/2)
        return omega_power(ks * (size // 2) + size - ks * exponent, size)

    def build_m(self, *, n: int, s: int) -> ComplexMatrix:
        """
        Real orthogonal factor M^(s): diagonal (-1)^⌊j/2^s⌋/√2 and 1/√2 on the subdiagonal
        selected by j_s.
        """
        size, j, js = self._indices(n, s)
        out = np.zeros((size, size), dtype=np.complex128)
        out[j, j] = np.where(js == 1, -SQRT1_2, SQRT1_2)
        lower = j[js == 1]
        out[lower, lower - (1 << s)] = SQRT1_2
        upper = j[js == 0]
        out[upper, upper + (1 << s)] = SQRT1_2
        return out

    def build_m_tensor(self, *, n: int, s: int) -> ComplexMatrix:
        """Kronecker chain I^(n-s-1) ⊗ H ⊗ I^(s), the Hadamard sitting in slot s."""
        self._indices(n, s)
        return kron_chain([IDENTITY_2] * (n - s - 1) + [HADAMARD] + [IDENTITY_2] * s)

    def build_n(self, *, n: int, s: int) -> ComplexMatrix:
        """Diagonal factor N^(s) with N_jj = (-1)^⌊j/2^s⌋ ω^(j_s·(0.j)·2^(n+s))."""
        size, j, js = self._indices(n, s)
        exponent = bit_util.twiddle_exponent(j, n, s, n - 1)
        return np.diag(omega_power(js * (size // 2 + exponent), size))

    def build_n_approx(self, *, n: int, s: int, m: int) -> ComplexMatrix:
        """
        Diagonal factor of the approximate step: product of R^(s,t,t-s+1) for
        t = s+1 .. min(s+m-1, n-1), the identity when that range is empty.
        """
        size, j, js = self._indices(n, s)
        param = ApproximationParam.of(n, m)
        diagonal = np.ones(size, dtype=np.complex128)
        for t in range(s + 1, param.top_bit(s) + 1):
            diagonal = diagonal * self._r_diagonal(n, j, s, t, t - s + 1)
        return np.diag(diagonal)

    def build_r(self, *, n: int, s: int, t: int, u: int) -> ComplexMatrix:
        """
        Diagonal R^(s,t,u) with entry exp(2πi/2^u) where bits j_s and j_t are both one.

        Args:
            n: Number of bits.
            s: First qubit.
            t: Second qubit, t != s.
            u: Phase denominator exponent, 1 <= u <= n.

        Returns:
            ComplexMatrix: The controlled-phase gate embedded on qubits (s, t).
        """
        self._check_width(n)
        if not (0 <= s < n and 0 <= t < n) or s == t:
            raise StepMatrixException.of(ResponseCode.QUBIT_OUT_OF_RANGE, f"s={s}, t={t}, n={n}")
        if not 1 <= u <= n:
            raise StepMatrixException.of(ResponseCode.PARAMETER_ERROR, f"u={u} outside [1, {n}]")
        j = np.arange(1 << n, dtype=np.int64)
        return np.diag(self._r_diagonal(n, j, s, t, u))

    def qr_decompose_step(self, *, p: ArrayLike, n: int, s: int) -> StepDecomposition:
        """
        Orthogonal-times-diagonal QR of a step matrix along the Gram-Schmidt path.

        The columns of P^(s) are already orthonormal, so every projection coefficient off
        the diagonal vanishes and the triangular factor degenerates to a diagonal of unit
        phases. Each column k is scaled by α_k, the phase that turns its diagonal entry into
        the real value (-1)^⌊k/2^s⌋/√2, giving M = P·diag(α) and N = diag(conj(α)).

        Args:
            p: The matrix to decompose, expected to be build_p(n, s).
            n: Number of bits.
            s: Step index.

        Returns:
            StepDecomposition: P, M, N, α and the residuals against the closed forms.

        Raises:
            StepMatrixException: When p is not the step matrix or the extracted factors
                disagree with the closed forms.
        """
        tol = self.strict_tolerance
        expected = self.build_p(n=n, s=s)
        p = as_matrix(p)
        if p.shape != expected.shape or max_entry_distance(p, expected) > tol:
            raise StepMatrixException.of(ResponseCode.STRUCTURE_MISMATCH, f"input is not P^({s}) for n={n}")

        # Gram-Schmidt coefficients r_jk = <p_j, p_k>
        coefficients = p.conj().T @ p
        off_diagonal = coefficients - np.diag(np.diag(coefficients))
        if float(np.max(np.abs(off_diagonal))) > tol:
            raise StepMatrixException.of(ResponseCode.STRUCTURE_MISMATCH, "columns are not orthogonal")
        norms = np.sqrt(np.real(np.diag(coefficients)))
        if float(np.max(np.abs(norms - 1.0))) > tol:
            raise StepMatrixException.of(ResponseCode.STRUCTURE_MISMATCH, "columns are not normalized")

        _, _, ks = self._indices(n, s)
        pivots = np.diag(p)
        alpha = np.where(ks == 1, -1.0, 1.0) * pivots.conj() / np.abs(pivots)
        m_factor = p * alpha[np.newaxis, :]
        n_factor = np.diag(alpha.conj())

        decomposition = StepDecomposition(
            n=n,
            s=s,
            p=p,
            m_factor=m_factor,
            n_factor=n_factor,
            alpha=alpha,
            factor_residual=max_entry_distance(matmul(m_factor, n_factor), p),
            m_residual=max_entry_distance(m_factor, self.build_m(n=n, s=s)),
            n_residual=max_entry_distance(n_factor, self.build_n(n=n, s=s)),
            alpha_residual=float(np.max(np.abs(alpha - self.build_alpha(n=n, s=s)))),
        )
        logger.debug(f"qr of P^({s}), n={n}: max residual {decomposition.max_residual:.3e}")
        if decomposition.max_residual > tol:
            raise StepMatrixException.of(
                ResponseCode.STRUCTURE_MISMATCH,
                f"factors disagree with closed forms by {decomposition.max_residual:.3e}",
            )
        return decomposition

    def bit_reversal_matrix(self, *, n: int) -> ComplexMatrix:
        """A^(n): A_jk = 1 iff k = bit_reverse(j), the final swaps of the transform."""
        self._check_width(n)
        return permutation_matrix(bit_util.bit_reverse_indices(n))

    def transform_from_steps(self, *, n: int, m: Optional[int] = None) -> ComplexMatrix:
        """
        The full transform assembled from its steps: A^(n) · M^(0)N^(0) · ... · M^(n-1)N^(n-1).

        Args:
            n: Number of bits.
            m: Optional approximation degree; N^(s) is then truncated to build_n_approx.

        Returns:
            ComplexMatrix: The exact or approximate Fourier operator.
        """
        self._check_width(n)
        factors = [self.bit_reversal_matrix(n=n)]
        for s in range(n):
            diagonal = self.build_n(n=n, s=s) if m is None else self.build_n_approx(n=n, s=s, m=m)
            factors.append(matmul(self.build_m(n=n, s=s), diagonal))
        return matmul_chain(factors)

    @staticmethod
    def _r_diagonal(n: int, j: np.ndarray, s: int, t: int, u: int) -> np.ndarray:
        both = ((j >> s) & 1) * ((j >> t) & 1)
        return omega_power(both << (n - u), 1 << n)

    def _indices(self, n: int, s: int):
        self._check_width(n)
        if not 0 <= s < n:
            raise StepMatrixException.of(ResponseCode.STEP_OUT_OF_RANGE, f"s={s}, n={n}")
        j = np.arange(1 << n, dtype=np.int64)
        return 1 << n, j, (j >> s) & 1

    @staticmethod
    def _check_width(n: int) -> None:
        if not 1 <= n <= ConstantCode.MAX_DENSE_QUBITS:
            raise StepMatrixException.of(ResponseCode.DIMENSION_LIMIT_EXCEEDED, f"n={n}")
