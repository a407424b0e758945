import math
import time

import numpy as np
import pytest

from src.main.app.common.enums.enum import ResponseCode
from src.main.app.exception.domain import NumericsException, SimulatorException
from src.main.app.schema.circuit_schema import Circuit, ControlledPhase, Hadamard, Swap
from src.main.app.service.impl.circuit_service_impl import CircuitServiceImpl
from src.main.app.service.impl.fourier_service_impl import FourierServiceImpl
from src.main.app.service.impl.simulator_service_impl import SimulatorServiceImpl
from src.main.app.service.impl.step_matrix_service_impl import StepMatrixServiceImpl


@pytest.fixture(scope="module")
def simulator_service():
    return SimulatorServiceImpl(check_norm=True, norm_tolerance=1e-9)


@pytest.fixture(scope="module")
def circuit_service():
    return CircuitServiceImpl(step_service=StepMatrixServiceImpl())


@pytest.fixture(scope="module")
def fourier_service():
    return FourierServiceImpl()


def random_unit(rng: np.random.Generator, n: int) -> np.ndarray:
    x = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    return x / np.linalg.norm(x)


def test_prepare_basis_state(simulator_service):
    state = simulator_service.prepare_state(x=[1, 0])
    assert state.n == 1
    assert np.array_equal(state.amplitudes, [1, 0])


def test_prepare_normalizes(simulator_service):
    state = simulator_service.prepare_state(x=[3, 4, 0, 0], normalize=True)
    assert np.allclose(state.amplitudes, [0.6, 0.8, 0, 0], atol=1e-15)


@pytest.mark.parametrize(
    "x, normalize, code",
    [
        ([1, 1], False, ResponseCode.NON_UNIT_NORM),
        ([0, 0], True, ResponseCode.ZERO_VECTOR),
        ([1, 0, 0], False, ResponseCode.NOT_POWER_OF_TWO),
        ([1], False, ResponseCode.PARAMETER_ERROR),
    ],
)
def test_prepare_errors(simulator_service, x, normalize, code):
    with pytest.raises(SimulatorException) as exc_info:
        simulator_service.prepare_state(x=x, normalize=normalize)
    assert exc_info.value.code == code.code


def test_prepare_rejects_non_finite(simulator_service):
    with pytest.raises(NumericsException):
        simulator_service.prepare_state(x=[np.inf, 0])


def test_state_is_immutable(simulator_service):
    state = simulator_service.prepare_state(x=[1, 0])
    with pytest.raises(ValueError):
        state.amplitudes[0] = 0
    after = simulator_service.apply_gate(state=state, gate=Hadamard(target=0))
    assert np.array_equal(state.amplitudes, [1, 0])
    with pytest.raises(ValueError):
        after.amplitudes[0] = 0


@pytest.mark.parametrize(
    "x, gate, expected",
    [
        ([1, 0], Hadamard(target=0), [1 / math.sqrt(2), 1 / math.sqrt(2)]),
        ([0, 0, 0, 1], ControlledPhase(control=0, target=1, u=2), [0, 0, 0, 1j]),
        ([0, 1, 0, 0], Swap(a=0, b=1), [0, 0, 1, 0]),
        ([0, 0, 0, 1], ControlledPhase(control=1, target=0, u=1), [0, 0, 0, -1]),
        ([0, 1, 0, 0], Hadamard(target=1), [0, 1 / math.sqrt(2), 0, 1 / math.sqrt(2)]),
    ],
)
def test_apply_gate_examples(simulator_service, x, gate, expected):
    state = simulator_service.apply_gate(state=simulator_service.prepare_state(x=x), gate=gate)
    assert np.allclose(state.amplitudes, expected, atol=1e-15)


def test_apply_gate_out_of_range(simulator_service):
    state = simulator_service.prepare_state(x=[1, 0])
    with pytest.raises(SimulatorException):
        simulator_service.apply_gate(state=state, gate=Hadamard(target=1))


def test_gates_preserve_norm(simulator_service):
    rng = np.random.default_rng(17)
    state = simulator_service.prepare_state(x=random_unit(rng, 5))
    for gate in (Hadamard(target=3), ControlledPhase(control=4, target=0, u=5), Swap(a=1, b=4)):
        state = simulator_service.apply_gate(state=state, gate=gate)
        assert abs(state.norm - 1.0) < 1e-12


def test_empty_circuit_leaves_state(simulator_service):
    state = simulator_service.prepare_state(x=[0, 0, 1, 0])
    assert np.array_equal(simulator_service.run_circuit(state=state, circuit=Circuit(n=2)).amplitudes, [0, 0, 1, 0])


def test_qubit_count_mismatch(simulator_service, circuit_service):
    state = simulator_service.prepare_state(x=[1, 0, 0, 0])
    with pytest.raises(SimulatorException) as exc_info:
        simulator_service.run_circuit(state=state, circuit=circuit_service.synth_qft(n=3))
    assert exc_info.value.code == ResponseCode.QUBIT_COUNT_MISMATCH.code


@pytest.mark.parametrize("n", range(1, 11))
def test_transform_circuit_matches_dft(simulator_service, circuit_service, fourier_service, n):
    rng = np.random.default_rng(n)
    circuit = circuit_service.synth_qft(n=n)
    for _ in range(3):
        x = random_unit(rng, n)
        state = simulator_service.run_circuit(state=simulator_service.prepare_state(x=x), circuit=circuit)
        assert np.max(np.abs(state.amplitudes - fourier_service.dft_direct(x=x))) < 1e-9


@pytest.mark.parametrize("n", [12, 14])
def test_transform_circuit_matches_fft(simulator_service, circuit_service, fourier_service, n):
    x = random_unit(np.random.default_rng(n), n)
    circuit = circuit_service.synth_qft(n=n)
    state = simulator_service.run_circuit(state=simulator_service.prepare_state(x=x), circuit=circuit)
    assert np.max(np.abs(state.amplitudes - fourier_service.fft_classical(x=x))) < 1e-9


def test_sixteen_qubits_against_fft(simulator_service, circuit_service, fourier_service):
    n = 16
    x = random_unit(np.random.default_rng(2024), n)
    started = time.perf_counter()
    circuit = circuit_service.synth_qft(n=n)
    state = simulator_service.run_circuit(state=simulator_service.prepare_state(x=x), circuit=circuit)
    elapsed = time.perf_counter() - started
    assert np.max(np.abs(state.amplitudes - fourier_service.fft_classical(x=x))) < 1e-9
    assert elapsed < 5.0


@pytest.mark.parametrize("n", [1, 4, 9])
def test_zero_state_maps_to_uniform(simulator_service, circuit_service, n):
    x = np.zeros(1 << n)
    x[0] = 1.0
    circuit = circuit_service.synth_qft(n=n)
    state = simulator_service.run_circuit(state=simulator_service.prepare_state(x=x), circuit=circuit)
    assert np.allclose(state.amplitudes, 1 / math.sqrt(1 << n), atol=1e-12)


@pytest.mark.parametrize("n", range(1, 9))
def test_simulator_agrees_with_dense_expansion(simulator_service, circuit_service, n):
    rng = np.random.default_rng(100 + n)
    for m in range(1, n + 1):
        circuit = circuit_service.synth_aqft(n=n, m=m)
        unitary = circuit_service.circuit_to_unitary(circuit=circuit)
        x = random_unit(rng, n)
        state = simulator_service.run_circuit(state=simulator_service.prepare_state(x=x), circuit=circuit)
        assert np.max(np.abs(state.amplitudes - unitary @ x)) < 1e-10


def test_linearity(simulator_service, circuit_service):
    n = 5
    rng = np.random.default_rng(23)
    x = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    y = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    alpha, beta = 0.3 - 1.2j, 2.5 + 0.1j

    def run(v):
        for gate in circuit_service.synth_qft(n=n).gates:
            v = simulator_service.apply_gate_to_amplitudes(amplitudes=v, n=n, gate=gate)
        return v

    assert np.max(np.abs(run(alpha * x + beta * y) - (alpha * run(x) + beta * run(y)))) < 1e-9


def test_norm_check_can_be_disabled():
    loose = SimulatorServiceImpl(check_norm=False)
    state = loose.prepare_state(x=[1, 0])
    assert np.allclose(loose.apply_gate(state=state, gate=Hadamard(target=0)).amplitudes, [1 / math.sqrt(2)] * 2)


def test_width_limit(simulator_service):
    with pytest.raises(SimulatorException):
        simulator_service.apply_gate_to_amplitudes(amplitudes=[1, 0], n=27, gate=Hadamard(target=0))
