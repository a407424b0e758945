"""Simulator domain schema"""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class StateVector(BaseModel):
    """
    Amplitudes of an n-qubit register, index bit q holding qubit q
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(..., ge=1)
    amplitudes: np.ndarray

    @field_validator("amplitudes")
    @classmethod
    def freeze_amplitudes(cls, value: np.ndarray) -> np.ndarray:
        value = np.array(value, dtype=np.complex128)
        if value.ndim != 1:
            raise ValueError(f"amplitudes must be one-dimensional, got shape {value.shape}")
        value.flags.writeable = False
        return value

    @model_validator(mode="after")
    def length_matches_width(self):
        if self.amplitudes.shape[0] != 1 << self.n:
            raise ValueError(f"{self.amplitudes.shape[0]} amplitudes for {self.n} qubits")
        return self

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))
