"""Command report schema"""

from typing import List, Optional

from pydantic import BaseModel, Field, computed_field

from src.main.app.schema.circuit_schema import GateCounts


class CheckResult(BaseModel):
    """
    One measured error metric against its tolerance
    """

    name: str
    error: float = Field(..., ge=0)
    tolerance: float = Field(..., gt=0)

    @computed_field
    @property
    def passed(self) -> bool:
        return self.error <= self.tolerance


class RunReport(BaseModel):
    """
    Parameters, metrics and verdict of one subcommand run
    """

    subcommand: str
    n: int
    m: Optional[int] = None
    seed: Optional[int] = None
    tolerance: float
    checks: List[CheckResult] = []
    gate_counts: Optional[GateCounts] = None
    fft_operations: Optional[int] = None
    elapsed_seconds: float = 0.0

    @computed_field
    @property
    def max_error(self) -> float:
        return max((check.error for check in self.checks), default=0.0)

    @computed_field
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]


class ApproxRow(BaseModel):
    """
    One degree of the approximate transform next to its error bound
    """

    m: int
    controlled_phases: int
    measured_deviation: float
    bound: float
    modulus_error: float

    @computed_field
    @property
    def within_bound(self) -> bool:
        return self.measured_deviation <= self.bound
