"""Numerics domain schema"""

from pydantic import BaseModel, ConfigDict, Field


class Tolerance(BaseModel):
    """
    Entrywise comparison tolerance
    """

    model_config = ConfigDict(frozen=True)

    eps: float = Field(1e-10, gt=0)
