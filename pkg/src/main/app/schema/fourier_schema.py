"""Fourier domain schema"""

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.main.app.common.enums.enum import ResponseCode
from src.main.app.common.util import bit_util
from src.main.app.exception.domain import TransformException


class BitIndex(BaseModel):
    """
    An n-bit index with access to its binary expansion
    """

    model_config = ConfigDict(frozen=True)

    value: int = Field(..., ge=0)
    n: int = Field(..., ge=0)

    @model_validator(mode="after")
    def value_fits_width(self):
        if self.value >= 1 << self.n:
            raise ValueError(f"value {self.value} does not fit in {self.n} bits")
        return self

    def bit(self, s: int) -> int:
        return bit_util.bit(self.value, s)

    def binary_fraction(self) -> float:
        return bit_util.binary_fraction(self.value, self.n)


class ApproximationParam(BaseModel):
    """
    Degree m of the approximate transform over n bits, 1 <= m <= n
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    m: int = Field(..., ge=1)

    @model_validator(mode="after")
    def m_within_width(self):
        if self.m > self.n:
            raise ValueError(f"m={self.m} exceeds n={self.n}")
        return self

    @classmethod
    def of(cls, n: int, m: int) -> "ApproximationParam":
        """
        Validated construction raising the toolkit's own exception.

        Raises:
            TransformException: When m is outside [1, n].
        """
        if n < 1 or not 1 <= m <= n:
            raise TransformException.of(ResponseCode.APPROXIMATION_OUT_OF_RANGE, f"m={m}, n={n}")
        return cls(n=n, m=m)

    @property
    def is_exact(self) -> bool:
        return self.m == self.n

    def top_bit(self, s: int) -> int:
        """Last bit kept in the step-s phase: min(s+m-1, n-1)."""
        return min(s + self.m - 1, self.n - 1)
