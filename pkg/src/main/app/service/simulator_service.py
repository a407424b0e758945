"""Simulator service interface"""

from abc import ABC, abstractmethod

from numpy.typing import ArrayLike

from src.main.app.common.util.matrix_util import ComplexVector
from src.main.app.schema.circuit_schema import Circuit, Gate
from src.main.app.schema.simulator_schema import StateVector


class SimulatorService(ABC):
    @abstractmethod
    def prepare_state(self, *, x: ArrayLike, normalize: bool = False) -> StateVector: ...

    @abstractmethod
    def apply_gate(self, *, state: StateVector, gate: Gate) -> StateVector: ...

    @abstractmethod
    def run_circuit(self, *, state: StateVector, circuit: Circuit) -> StateVector: ...

    @abstractmethod
    def apply_gate_to_amplitudes(self, *, amplitudes: ArrayLike, n: int, gate: Gate) -> ComplexVector: ...
