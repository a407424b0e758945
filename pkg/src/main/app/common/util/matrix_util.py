"""Dense complex linear algebra kernel"""

from functools import reduce
from typing import Iterable, Optional, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.main.app.common.enums.enum import ConstantCode, ResponseCode
from src.main.app.exception.domain import NumericsException
from src.main.app.schema.numerics_schema import Tolerance

ComplexMatrix = NDArray[np.complex128]
ComplexVector = NDArray[np.complex128]

SQRT1_2 = np.sqrt(0.5)
HADAMARD: ComplexMatrix = np.array([[SQRT1_2, SQRT1_2], [SQRT1_2, -SQRT1_2]], dtype=np.complex128)
IDENTITY_2: ComplexMatrix = np.eye(2, dtype=np.complex128)
MAX_DENSE_DIM = 1 << ConstantCode.MAX_DENSE_QUBITS

# omega^k for k a multiple of a quarter turn
_QUARTER_TURNS = np.array([1, 1j, -1, -1j], dtype=np.complex128)

HADAMARD.flags.writeable = False
IDENTITY_2.flags.writeable = False


def as_vector(v: ArrayLike) -> ComplexVector:
    """Coerce to a finite one-dimensional complex128 array."""
    arr = np.asarray(v, dtype=np.complex128)
    if arr.ndim != 1 or arr.size == 0:
        raise NumericsException.of(ResponseCode.DIMENSION_MISMATCH, f"expected a non-empty vector, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NumericsException.of(ResponseCode.PARAMETER_ERROR, "vector has non-finite entries")
    return arr


def as_matrix(a: ArrayLike) -> ComplexMatrix:
    """Coerce to a finite square complex128 array."""
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise NumericsException.of(ResponseCode.DIMENSION_MISMATCH, f"expected a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NumericsException.of(ResponseCode.PARAMETER_ERROR, "matrix has non-finite entries")
    return arr


def _check_same_dim(a: ComplexMatrix, dim: int, what: str) -> None:
    if a.shape[0] != dim:
        raise NumericsException.of(ResponseCode.DIMENSION_MISMATCH, f"{a.shape[0]} vs {what} {dim}")


def identity(dim: int) -> ComplexMatrix:
    if dim < 1 or dim > MAX_DENSE_DIM:
        raise NumericsException.of(ResponseCode.DIMENSION_LIMIT_EXCEEDED, f"dim={dim}")
    return np.eye(dim, dtype=np.complex128)


def matmul(a: ArrayLike, b: ArrayLike) -> ComplexMatrix:
    """
    Standard product of two square matrices of equal dimension.

    Args:
        a: Left factor.
        b: Right factor.

    Returns:
        ComplexMatrix: The product a·b.
    """
    a, b = as_matrix(a), as_matrix(b)
    _check_same_dim(a, b.shape[0], "right factor dim")
    return a @ b


def matmul_chain(matrices: Iterable[ArrayLike]) -> ComplexMatrix:
    """Left-to-right product of a non-empty sequence of matrices."""
    return np.array(reduce(matmul, (as_matrix(m) for m in matrices)))


def matvec(a: ArrayLike, v: ArrayLike) -> ComplexVector:
    """
    Matrix-vector product y_j = sum_k a_jk v_k.

    Args:
        a: Square matrix.
        v: Vector with length equal to the matrix dimension.

    Returns:
        ComplexVector: The product a·v.
    """
    a, v = as_matrix(a), as_vector(v)
    _check_same_dim(a, v.shape[0], "vector length")
    return a @ v


def kron(a: ArrayLike, b: ArrayLike, max_dim: int = MAX_DENSE_DIM) -> ComplexMatrix:
    """
    Kronecker product with a guard against accidental blow-up.

    Args:
        a: Left factor.
        b: Right factor.
        max_dim: Largest admitted result dimension.

    Returns:
        ComplexMatrix: a ⊗ b, of dimension a.dim·b.dim.
    """
    a, b = as_matrix(a), as_matrix(b)
    dim = a.shape[0] * b.shape[0]
    if dim > max_dim:
        raise NumericsException.of(ResponseCode.DIMENSION_LIMIT_EXCEEDED, f"kron result dim {dim} > {max_dim}")
    return np.kron(a, b)


def kron_chain(matrices: Iterable[ArrayLike]) -> ComplexMatrix:
    """Kronecker product of a non-empty sequence, leftmost factor most significant."""
    return np.array(reduce(kron, (as_matrix(m) for m in matrices)))


def adjoint(a: ArrayLike) -> ComplexMatrix:
    return as_matrix(a).conj().T


def max_entry_distance(a: ArrayLike, b: ArrayLike) -> float:
    """
    Largest entrywise modulus of a − b.

    Args:
        a: First matrix.
        b: Second matrix of the same dimension.

    Returns:
        float: max over (j, k) of |a_jk − b_jk|.
    """
    a, b = as_matrix(a), as_matrix(b)
    _check_same_dim(a, b.shape[0], "dim")
    return float(np.max(np.abs(a - b)))


def max_vector_distance(x: ArrayLike, y: ArrayLike) -> float:
    x, y = as_vector(x), as_vector(y)
    if x.shape != y.shape:
        raise NumericsException.of(ResponseCode.DIMENSION_MISMATCH, f"{x.shape[0]} vs {y.shape[0]}")
    return float(np.max(np.abs(x - y)))


def is_unitary(a: ArrayLike, tol: Optional[Union[Tolerance, float]] = None) -> bool:
    """
    Check a·a† against the identity.

    Args:
        a: Square matrix.
        tol: Entrywise tolerance, defaults to Tolerance().

    Returns:
        bool: True iff max |a·a† − I| <= tol.eps.
    """
    eps = _eps(tol)
    a = as_matrix(a)
    residual = a @ a.conj().T - np.eye(a.shape[0], dtype=np.complex128)
    return float(np.max(np.abs(residual))) <= eps


def is_diagonal(a: ArrayLike, tol: Optional[Union[Tolerance, float]] = None) -> bool:
    a = as_matrix(a)
    off = a - np.diag(np.diag(a))
    return float(np.max(np.abs(off))) <= _eps(tol)


def omega_power(k: ArrayLike, order: int) -> Union[complex, ComplexVector]:
    """
    exp(2πi·k/order) with the exponent reduced modulo the order first.

    Quarter turns are returned exactly so that sign flips and ±i stay bit exact.

    Args:
        k: Integer exponent or array of exponents.
        order: Order N of the root of unity.

    Returns:
        The power ω_N^k, scalar or array matching k.
    """
    k_arr = np.mod(np.asarray(k, dtype=np.int64), order)
    quarter = np.mod(4 * k_arr, order) == 0
    exact = _QUARTER_TURNS[np.where(quarter, (4 * k_arr) // order, 0) % 4]
    result = np.where(quarter, exact, np.exp(2j * np.pi * k_arr / order))
    if np.ndim(result) == 0:
        return complex(result)
    return result.astype(np.complex128)


def permutation_matrix(targets: ArrayLike) -> ComplexMatrix:
    """Matrix with a 1 at (j, targets[j]) for every row j."""
    targets = np.asarray(targets, dtype=np.int64)
    dim = targets.shape[0]
    if dim > MAX_DENSE_DIM:
        raise NumericsException.of(ResponseCode.DIMENSION_LIMIT_EXCEEDED, f"dim={dim}")
    out = np.zeros((dim, dim), dtype=np.complex128)
    out[np.arange(dim), targets] = 1.0
    return out


def format_matrix(a: ArrayLike, digits: int = 6) -> str:
    """Render a matrix as a text grid of "re+imi" entries, one row per line."""
    a = as_matrix(a)
    return "\n".join(" ".join(format_complex(z, digits) for z in row) for row in a) + "\n"


def format_complex(z: complex, digits: int = 6) -> str:
    re, im = float(np.real(z)), float(np.imag(z))
    # avoid printing -0
    re, im = re + 0.0, im + 0.0
    return f"{re:.{digits}g}{'+' if im >= 0 else '-'}{abs(im):.{digits}g}i"


def _eps(tol: Optional[Union[Tolerance, float]]) -> float:
    if tol is None:
        return Tolerance().eps
    if isinstance(tol, Tolerance):
        return tol.eps
    return Tolerance(eps=tol).eps
