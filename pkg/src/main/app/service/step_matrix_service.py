"""Step matrix service interface"""

from abc import ABC, abstractmethod
from typing import Optional

from numpy.typing import ArrayLike

from src.main.app.common.util.matrix_util import ComplexMatrix, ComplexVector
from src.main.app.schema.step_schema import StepDecomposition


class StepMatrixService(ABC):
    @abstractmethod
    def build_p(self, *, n: int, s: int) -> ComplexMatrix: ...

    @abstractmethod
    def build_alpha(self, *, n: int, s: int) -> ComplexVector: ...

    @abstractmethod
    def build_m(self, *, n: int, s: int) -> ComplexMatrix: ...

    @abstractmethod
    def build_m_tensor(self, *, n: int, s: int) -> ComplexMatrix: ...

    @abstractmethod
    def build_n(self, *, n: int, s: int) -> ComplexMatrix: ...

    @abstractmethod
    def build_n_approx(self, *, n: int, s: int, m: int) -> ComplexMatrix: ...

    @abstractmethod
    def build_r(self, *, n: int, s: int, t: int, u: int) -> ComplexMatrix: ...

    @abstractmethod
    def qr_decompose_step(self, *, p: ArrayLike, n: int, s: int) -> StepDecomposition: ...

    @abstractmethod
    def bit_reversal_matrix(self, *, n: int) -> ComplexMatrix: ...

    @abstractmethod
    def transform_from_steps(self, *, n: int, m: Optional[int] = None) -> ComplexMatrix: ...
