"""Circuit service interface"""

from abc import ABC, abstractmethod

from src.main.app.common.util.matrix_util import ComplexMatrix
from src.main.app.schema.circuit_schema import Circuit, Gate, GateCounts


class CircuitService(ABC):
    @abstractmethod
    def synth_qft(self, *, n: int) -> Circuit: ...

    @abstractmethod
    def synth_aqft(self, *, n: int, m: int) -> Circuit: ...

    @abstractmethod
    def gate_unitary(self, *, n: int, gate: Gate) -> ComplexMatrix: ...

    @abstractmethod
    def circuit_to_unitary(self, *, circuit: Circuit) -> ComplexMatrix: ...

    @abstractmethod
    def gate_counts(self, *, circuit: Circuit) -> GateCounts: ...

    @abstractmethod
    def emit_circuit_text(self, *, circuit: Circuit) -> str: ...

    @abstractmethod
    def parse_circuit_text(self, *, text: str) -> Circuit: ...

    @abstractmethod
    def emit_qasm(self, *, circuit: Circuit) -> str: ...

    @abstractmethod
    def gates_commute(self, *, first: Gate, second: Gate) -> bool: ...
