"""Fourier transform service interface"""

from abc import ABC, abstractmethod
from typing import Optional

from numpy.typing import ArrayLike

from src.main.app.common.util.matrix_util import ComplexMatrix, ComplexVector
from src.main.app.schema.fourier_schema import BitIndex


class FourierService(ABC):
    @abstractmethod
    def dft_direct(self, *, x: ArrayLike) -> ComplexVector: ...

    @abstractmethod
    def dft_approx_direct(self, *, x: ArrayLike, m: int) -> ComplexVector: ...

    @abstractmethod
    def dft_matrix(self, *, n: int, m: Optional[int] = None) -> ComplexMatrix: ...

    @abstractmethod
    def phase_error_bound(self, *, n: int, m: int) -> float: ...

    @abstractmethod
    def min_m_for_error(self, *, eps_max: float, n: int) -> int: ...

    @abstractmethod
    def fft_classical(self, *, x: ArrayLike) -> ComplexVector: ...

    @abstractmethod
    def fft_approx_classical(self, *, x: ArrayLike, m: int) -> ComplexVector: ...

    @abstractmethod
    def bit_reverse(self, *, v: BitIndex) -> BitIndex: ...

    @abstractmethod
    def fft_operation_count(self, *, n: int) -> int: ...
