"""Circuit service impl"""

from typing import List

import numpy as np
from loguru import logger

from src.main.app.common.enums.enum import ConstantCode, ResponseCode
from src.main.app.common.util import bit_util, circuit_text_util
from src.main.app.common.util.matrix_util import ComplexMatrix, identity, matmul, permutation_matrix
from src.main.app.exception.domain import CircuitException
from src.main.app.schema.circuit_schema import Circuit, ControlledPhase, Gate, GateCounts, Hadamard, Swap
from src.main.app.schema.fourier_schema import ApproximationParam
from src.main.app.service.circuit_service import CircuitService
from src.main.app.service.step_matrix_service import StepMatrixService


class CircuitServiceImpl(CircuitService):
    """
    Synthesizes exact and approximate transform circuits and expands them back to
    dense unitaries through the step matrix builders.
    """

    def __init__(self, step_service: StepMatrixService):
        """
        Initialize the CircuitServiceImpl instance.

        Args:
            step_service (StepMatrixService): Source of the gate embeddings used by circuit_to_unitary.
        """
        self.step_service = step_service

    def synth_qft(self, *, n: int) -> Circuit:
        """
        Exact transform circuit: per step s = n-1 .. 0 the controlled phases R^(s,t,t-s+1)
        for t = n-1 .. s+1, then a Hadamard on qubit s; finally the reversing swaps.

        Args:
            n: Number of qubits, 1 <= n <= 24.

        Returns:
            Circuit: n Hadamards, n(n-1)/2 controlled phases and ⌊n/2⌋ swaps.
        """
        self._check_synth_width(n)
        return self._synthesize(ApproximationParam(n=n, m=n))

    def synth_aqft(self, *, n: int, m: int) -> Circuit:
        """
        Approximate transform circuit keeping only the controlled phases with t <= s+m-1.

        Args:
            n: Number of qubits, 1 <= n <= 24.
            m: Approximation degree, 1 <= m <= n; m = n gives synth_qft(n).

        Returns:
            Circuit: The truncated circuit, every phase exponent u <= m.
        """
        self._check_synth_width(n)
        return self._synthesize(ApproximationParam.of(n, m))

    def gate_unitary(self, *, n: int, gate: Gate) -> ComplexMatrix:
        """
        Dense 2^n x 2^n embedding of a single gate.

        Hadamards embed as the Kronecker chain with H in slot q, controlled phases as
        R^(control,target,u) and swaps as the permutation transposing the two bits.

        Args:
            n: Width of the register.
            gate: The gate to embed.

        Returns:
            ComplexMatrix: The embedded gate.
        """
        self._check_dense_width(n)
        if max(gate.qubits) >= n:
            raise CircuitException.of(ResponseCode.QUBIT_OUT_OF_RANGE, f"{gate} on {n} qubits")
        if isinstance(gate, Hadamard):
            return self.step_service.build_m_tensor(n=n, s=gate.target)
        if isinstance(gate, ControlledPhase):
            if gate.u <= n:
                return self.step_service.build_r(n=n, s=gate.control, t=gate.target, u=gate.u)
            # a phase finer than the register's root of unity
            idx = np.arange(1 << n, dtype=np.int64)
            both = bit_util.bit(idx, gate.control) & bit_util.bit(idx, gate.target)
            return np.diag(np.where(both == 1, np.exp(1j * gate.angle), 1.0 + 0.0j))
        return permutation_matrix(bit_util.swap_bits_indices(n, gate.a, gate.b))

    def circuit_to_unitary(self, *, circuit: Circuit) -> ComplexMatrix:
        """
        Product of the gate embeddings in application order, the first gate rightmost.

        Args:
            circuit: Circuit over at most 12 qubits.

        Returns:
            ComplexMatrix: The circuit's unitary; the identity for an empty gate list.

        Raises:
            CircuitException: When the circuit is too wide for dense expansion.
        """
        n = circuit.n
        self._check_dense_width(n)
        logger.debug(f"expanding circuit of {len(circuit.gates)} gates over {n} qubits")
        unitary = identity(1 << n)
        for gate in circuit.gates:
            unitary = matmul(self.gate_unitary(n=n, gate=gate), unitary)
        return unitary

    def gate_counts(self, *, circuit: Circuit) -> GateCounts:
        hadamards = sum(1 for gate in circuit.gates if isinstance(gate, Hadamard))
        controlled_phases = sum(1 for gate in circuit.gates if isinstance(gate, ControlledPhase))
        swaps = sum(1 for gate in circuit.gates if isinstance(gate, Swap))
        return GateCounts(
            hadamards=hadamards,
            controlled_phases=controlled_phases,
            swaps=swaps,
            total=len(circuit.gates),
        )

    def emit_circuit_text(self, *, circuit: Circuit) -> str:
        return circuit_text_util.emit_circuit_text(circuit)

    def parse_circuit_text(self, *, text: str) -> Circuit:
        return circuit_text_util.parse_circuit_text(text)

    def emit_qasm(self, *, circuit: Circuit) -> str:
        """
        OpenQASM 2.0 rendering on a single register q[n].

        Controlled phases become cu1(2*pi/2^u), which is symmetric in its two qubits.

        Args:
            circuit: The circuit to render.

        Returns:
            str: LF-terminated program text.
        """
        lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{circuit.n}];"]
        for gate in circuit.gates:
            if isinstance(gate, Hadamard):
                lines.append(f"h q[{gate.target}];")
            elif isinstance(gate, ControlledPhase):
                lines.append(f"cu1(2*pi/2^{gate.u}) q[{gate.control}],q[{gate.target}];")
            else:
                lines.append(f"swap q[{gate.a}],q[{gate.b}];")
        return "\n".join(lines) + "\n"

    def gates_commute(self, *, first: Gate, second: Gate) -> bool:
        """True for gates on disjoint qubits and for any two controlled phases, both being diagonal."""
        if not set(first.qubits) & set(second.qubits):
            return True
        return isinstance(first, ControlledPhase) and isinstance(second, ControlledPhase)

    @staticmethod
    def _synthesize(param: ApproximationParam) -> Circuit:
        n = param.n
        gates: List[Gate] = []
        for s in range(n - 1, -1, -1):
            for t in range(param.top_bit(s), s, -1):
                gates.append(ControlledPhase(control=s, target=t, u=t - s + 1))
            gates.append(Hadamard(target=s))
        for t in range(n // 2):
            gates.append(Swap(a=t, b=n - 1 - t))
        logger.debug(f"synthesized {len(gates)} gates for n={n}, m={param.m}")
        return Circuit(n=n, gates=tuple(gates))

    @staticmethod
    def _check_synth_width(n: int) -> None:
        if not 1 <= n <= ConstantCode.MAX_SYNTH_QUBITS:
            raise CircuitException.of(ResponseCode.DIMENSION_LIMIT_EXCEEDED, f"n={n} outside [1, 24]")

    @staticmethod
    def _check_dense_width(n: int) -> None:
        if not 1 <= n <= ConstantCode.MAX_DENSE_QUBITS:
            raise CircuitException.of(ResponseCode.DIMENSION_LIMIT_EXCEEDED, f"n={n} too wide for dense expansion")
