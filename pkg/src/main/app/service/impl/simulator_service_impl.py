"""Simulator service impl"""

import numpy as np
from loguru import logger
from numpy.typing import ArrayLike

from src.main.app.common.enums.enum import ConstantCode, ResponseCode
from src.main.app.common.util import bit_util
from src.main.app.common.util.matrix_util import SQRT1_2, ComplexVector, as_vector, omega_power
from src.main.app.exception.domain import SimulatorException
from src.main.app.schema.circuit_schema import Circuit, ControlledPhase, Gate, Hadamard
from src.main.app.schema.simulator_schema import StateVector
from src.main.app.service.simulator_service import SimulatorService


class SimulatorServiceImpl(SimulatorService):
    """
    State vector simulator applying each gate in O(2^n) without building matrices.

    Amplitudes are viewed as an n-axis tensor of shape (2, ..., 2); qubit q lives on
    axis n-1-q so that index bit q selects along it.
    """

    def __init__(self, check_norm: bool = True, norm_tolerance: float = 1e-9):
        """
        Initialize the SimulatorServiceImpl instance.

        Args:
            check_norm (bool): Assert the unit norm after every gate.
            norm_tolerance (float): Admitted deviation of the norm from one.
        """
        self.check_norm = check_norm
        self.norm_tolerance = norm_tolerance

    def prepare_state(self, *, x: ArrayLike, normalize: bool = False) -> StateVector:
        """
        Load amplitudes into a register.

        Args:
            x: Amplitudes, length 2^n with 1 <= n <= 26.
            normalize: Scale x to unit norm instead of rejecting it.

        Returns:
            StateVector: The prepared state.

        Raises:
            SimulatorException: On a length that is not a power of two, a zero vector
                with normalize set, or a non-unit norm without it.
        """
        x = as_vector(x)
        length = x.shape[0]
        if not bit_util.is_power_of_two(length):
            raise SimulatorException.of(ResponseCode.NOT_POWER_OF_TWO, f"length={length}")
        n = bit_util.qubit_count(length)
        self._check_width(n)
        norm = float(np.linalg.norm(x))
        if normalize:
            if norm == 0.0:
                raise SimulatorException.of(ResponseCode.ZERO_VECTOR)
            x = x / norm
        elif abs(norm - 1.0) > self.norm_tolerance:
            raise SimulatorException.of(ResponseCode.NON_UNIT_NORM, f"norm={norm!r}")
        return StateVector(n=n, amplitudes=x)

    def apply_gate(self, *, state: StateVector, gate: Gate) -> StateVector:
        """
        One gate applied to a state; the input state is left untouched.

        Args:
            state: The register state.
            gate: Gate whose qubits are below state.n.

        Returns:
            StateVector: The new state.
        """
        buffer = self.apply_gate_to_amplitudes(amplitudes=state.amplitudes, n=state.n, gate=gate)
        self._assert_norm(buffer, gate)
        return self._freeze(state.n, buffer)

    def run_circuit(self, *, state: StateVector, circuit: Circuit) -> StateVector:
        """
        Fold of apply_gate over the circuit's gates in list order.

        A single working buffer is mutated gate by gate.

        Args:
            state: Initial state, state.n == circuit.n.
            circuit: The circuit to run.

        Returns:
            StateVector: The final state.

        Raises:
            SimulatorException: When the qubit counts differ.
        """
        if state.n != circuit.n:
            raise SimulatorException.of(
                ResponseCode.QUBIT_COUNT_MISMATCH, f"state has {state.n} qubits, circuit {circuit.n}"
            )
        logger.debug(f"running {len(circuit.gates)} gates on {state.n} qubits")
        buffer = np.array(state.amplitudes, dtype=np.complex128)
        for gate in circuit.gates:
            self._check_gate(gate, state.n)
            self._apply_in_place(buffer, state.n, gate)
            self._assert_norm(buffer, gate)
        return self._freeze(state.n, buffer)

    def apply_gate_to_amplitudes(self, *, amplitudes: ArrayLike, n: int, gate: Gate) -> ComplexVector:
        """
        Gate application on a raw amplitude array, without any norm requirement.

        Args:
            amplitudes: Array of length 2^n, copied before mutation.
            n: Number of qubits.
            gate: The gate to apply.

        Returns:
            ComplexVector: The transformed copy.
        """
        self._check_width(n)
        buffer = np.array(as_vector(amplitudes), dtype=np.complex128)
        if buffer.shape[0] != 1 << n:
            raise SimulatorException.of(ResponseCode.DIMENSION_MISMATCH, f"{buffer.shape[0]} amplitudes, n={n}")
        self._check_gate(gate, n)
        self._apply_in_place(buffer, n, gate)
        return buffer

    @staticmethod
    def _apply_in_place(buffer: ComplexVector, n: int, gate: Gate) -> None:
        if isinstance(gate, Hadamard):
            q = gate.target
            pairs = buffer.reshape(1 << (n - q - 1), 2, 1 << q)
            low = pairs[:, 0, :].copy()
            high = pairs[:, 1, :]
            pairs[:, 0, :] = SQRT1_2 * (low + high)
            pairs[:, 1, :] = SQRT1_2 * (low - high)
        elif isinstance(gate, ControlledPhase):
            tensor = buffer.reshape((2,) * n)
            selector = [slice(None)] * n
            selector[n - 1 - gate.control] = 1
            selector[n - 1 - gate.target] = 1
            tensor[tuple(selector)] *= _phase(gate)
        else:
            tensor = buffer.reshape((2,) * n)
            buffer[:] = np.swapaxes(tensor, n - 1 - gate.a, n - 1 - gate.b).reshape(-1)

    def _assert_norm(self, buffer: ComplexVector, gate: Gate) -> None:
        if not self.check_norm:
            return
        norm = float(np.linalg.norm(buffer))
        if abs(norm - 1.0) > self.norm_tolerance:
            logger.error(f"norm drifted to {norm!r} after {gate}")
            raise SimulatorException.of(ResponseCode.NON_UNIT_NORM, f"norm={norm!r} after {gate}")

    @staticmethod
    def _check_gate(gate: Gate, n: int) -> None:
        if max(gate.qubits) >= n:
            raise SimulatorException.of(ResponseCode.QUBIT_OUT_OF_RANGE, f"{gate} on {n} qubits")

    @staticmethod
    def _check_width(n: int) -> None:
        if n < 1:
            raise SimulatorException.of(ResponseCode.PARAMETER_ERROR, "a register needs at least one qubit")
        if n > ConstantCode.MAX_SIM_QUBITS:
            raise SimulatorException.of(ResponseCode.DIMENSION_LIMIT_EXCEEDED, f"n={n}")

    @staticmethod
    def _freeze(n: int, buffer: ComplexVector) -> StateVector:
        buffer.flags.writeable = False
        # the buffer is owned here and already validated
        return StateVector.model_construct(n=n, amplitudes=buffer)


def _phase(gate: ControlledPhase) -> complex:
    # exact quarter turns for u <= 2
    if gate.u < 63:
        return omega_power(1, 1 << gate.u)
    return complex(np.exp(1j * gate.angle))
