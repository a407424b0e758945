"""Circuit domain schema"""

import math
from typing import Annotated, Literal, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.main.app.common.enums.enum import GateKind


class Hadamard(BaseModel):
    """
    Hadamard gate on one qubit
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal[GateKind.hadamard] = GateKind.hadamard
    target: int = Field(..., ge=0)

    @property
    def qubits(self) -> Tuple[int, ...]:
        return (self.target,)


class ControlledPhase(BaseModel):
    """
    Two-qubit diagonal gate applying exp(2πi/2^u) when both qubits are one
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal[GateKind.controlled_phase] = GateKind.controlled_phase
    control: int = Field(..., ge=0)
    target: int = Field(..., ge=0)
    u: int = Field(..., ge=1)

    @model_validator(mode="after")
    def distinct_qubits(self):
        if self.control == self.target:
            raise ValueError(f"control and target are both qubit {self.control}")
        return self

    @property
    def qubits(self) -> Tuple[int, ...]:
        return self.control, self.target

    @property
    def angle(self) -> float:
        # underflows to 0.0 for very large u
        return math.ldexp(2.0 * math.pi, -self.u)


class Swap(BaseModel):
    """
    Exchange of two qubits
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal[GateKind.swap] = GateKind.swap
    a: int = Field(..., ge=0)
    b: int = Field(..., ge=0)

    @model_validator(mode="after")
    def distinct_qubits(self):
        if self.a == self.b:
            raise ValueError(f"swap of qubit {self.a} with itself")
        return self

    @property
    def qubits(self) -> Tuple[int, ...]:
        return self.a, self.b


Gate = Annotated[Union[Hadamard, ControlledPhase, Swap], Field(discriminator="kind")]


class Circuit(BaseModel):
    """
    Qubit count plus an ordered gate list; qubit 0 is the least significant bit of
    basis-state indices and gates apply in list order
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    gates: Tuple[Gate, ...] = ()

    @model_validator(mode="after")
    def qubits_in_range(self):
        for position, gate in enumerate(self.gates):
            if max(gate.qubits) >= self.n:
                raise ValueError(f"gate {position} acts on qubit {max(gate.qubits)} of a {self.n}-qubit circuit")
        return self


class GateCounts(BaseModel):
    """
    Tally of a circuit's gates by variant
    """

    model_config = ConfigDict(frozen=True)

    hadamards: int = Field(0, ge=0)
    controlled_phases: int = Field(0, ge=0)
    swaps: int = Field(0, ge=0)
    total: int = Field(0, ge=0)

    @model_validator(mode="after")
    def total_is_sum(self):
        if self.total != self.hadamards + self.controlled_phases + self.swaps:
            raise ValueError("total must equal hadamards + controlled_phases + swaps")
        return self

    @property
    def steps(self) -> int:
        """Hadamards plus controlled phases, n(n+1)/2 for the exact transform."""
        return self.hadamards + self.controlled_phases
