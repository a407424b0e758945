"""Step matrix domain schema"""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator


class StepDecomposition(BaseModel):
    """
    The factorization P = M·N of one FFT step together with the column scaling α
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(..., ge=1)
    s: int = Field(..., ge=0)
    p: np.ndarray
    m_factor: np.ndarray
    n_factor: np.ndarray
    alpha: np.ndarray
    factor_residual: float = Field(..., ge=0)
    m_residual: float = Field(..., ge=0)
    n_residual: float = Field(..., ge=0)
    alpha_residual: float = Field(..., ge=0)

    @field_validator("p", "m_factor", "n_factor", "alpha")
    @classmethod
    def freeze_array(cls, value: np.ndarray) -> np.ndarray:
        value = np.array(value, dtype=np.complex128)
        value.flags.writeable = False
        return value

    @property
    def max_residual(self) -> float:
        return max(self.factor_residual, self.m_residual, self.n_residual, self.alpha_residual)
