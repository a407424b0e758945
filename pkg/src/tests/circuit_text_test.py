import pytest

from src.main.app.common.util.circuit_text_util import emit_circuit_text, format_gate, parse_circuit_text
from src.main.app.common.enums.enum import ResponseCode
from src.main.app.exception.domain import CircuitParseException
from src.main.app.schema.circuit_schema import Circuit, ControlledPhase, Hadamard, Swap
from src.main.app.service.impl.circuit_service_impl import CircuitServiceImpl
from src.main.app.service.impl.step_matrix_service_impl import StepMatrixServiceImpl


@pytest.fixture(scope="module")
def circuit_service():
    return CircuitServiceImpl(step_service=StepMatrixServiceImpl())


def test_emit_single_qubit(circuit_service):
    assert emit_circuit_text(circuit_service.synth_qft(n=1)) == "qubits 1\nh 0\n"


@pytest.mark.parametrize(
    "gate, line",
    [
        (Swap(a=0, b=3), "swap 0 3"),
        (Hadamard(target=2), "h 2"),
        (ControlledPhase(control=1, target=4, u=3), "cp 1 4 3"),
    ],
)
def test_format_gate(gate, line):
    assert format_gate(gate) == line


def test_parse_example():
    circuit = parse_circuit_text("qubits 2\nh 1\ncp 0 1 2\n")
    assert circuit == Circuit(n=2, gates=(Hadamard(target=1), ControlledPhase(control=0, target=1, u=2)))


def test_parse_skips_comments_and_blank_lines():
    text = "# transform on two qubits\n\nqubits 2\n  # first step\nh 1\n\nswap 0 1\n"
    assert parse_circuit_text(text) == Circuit(n=2, gates=(Hadamard(target=1), Swap(a=0, b=1)))


def test_parse_header_only():
    assert parse_circuit_text("qubits 3\n") == Circuit(n=3)


@pytest.mark.parametrize(
    "text, line_no, code",
    [
        ("qubits 1\nh 3\n", 2, ResponseCode.QUBIT_OUT_OF_RANGE),
        ("qubits 2\ncp 0 1 0\n", 2, ResponseCode.CIRCUIT_SYNTAX_ERROR),
        ("qubits 2\ncp 1 1 2\n", 2, ResponseCode.CIRCUIT_SYNTAX_ERROR),
        ("qubits 2\nh 0\nx 1\n", 3, ResponseCode.CIRCUIT_SYNTAX_ERROR),
        ("qubits 2\nh 0 1\n", 2, ResponseCode.CIRCUIT_SYNTAX_ERROR),
        ("qubits 2\nh -1\n", 2, ResponseCode.CIRCUIT_SYNTAX_ERROR),
        ("qubits 2\nswap 0 one\n", 2, ResponseCode.CIRCUIT_SYNTAX_ERROR),
        ("h 0\n", 1, ResponseCode.CIRCUIT_SYNTAX_ERROR),
        ("qubits 0\n", 1, ResponseCode.CIRCUIT_SYNTAX_ERROR),
        ("qubits 2\nh \u00b2\n", 2, ResponseCode.CIRCUIT_SYNTAX_ERROR),
        ("qubits \u0663\n", 1, ResponseCode.CIRCUIT_SYNTAX_ERROR),
        ("qubits 27\n", 1, ResponseCode.DIMENSION_LIMIT_EXCEEDED),
        ("qubits 100000000000000\nh 0\n", 1, ResponseCode.DIMENSION_LIMIT_EXCEEDED),
        ("# nothing\n", 0, ResponseCode.CIRCUIT_SYNTAX_ERROR),
    ],
)
def test_parse_errors(text, line_no, code):
    with pytest.raises(CircuitParseException) as exc_info:
        parse_circuit_text(text)
    assert exc_info.value.line_no == line_no
    assert exc_info.value.code == code.code
    if line_no:
        assert exc_info.value.msg.startswith(f"line {line_no}: ")


def test_round_trip_exact_five_qubits(circuit_service):
    circuit = circuit_service.synth_qft(n=5)
    assert parse_circuit_text(emit_circuit_text(circuit)) == circuit


@pytest.mark.parametrize("n", range(1, 11))
def test_round_trip_all_degrees(circuit_service, n):
    for m in range(1, n + 1):
        circuit = circuit_service.synth_aqft(n=n, m=m)
        text = circuit_service.emit_circuit_text(circuit=circuit)
        assert circuit_service.parse_circuit_text(text=text).gates == circuit.gates


def test_hand_written_file_is_fixed_point():
    text = "qubits 3\nh 2\ncp 1 2 2\nh 1\ncp 0 2 3\ncp 0 1 2\nh 0\nswap 0 2\n"
    assert emit_circuit_text(parse_circuit_text(text)) == text


def test_parse_accepts_simulator_width():
    assert parse_circuit_text("qubits 26\nh 25\n").n == 26


def test_very_small_phase_is_identity(circuit_service):
    circuit = parse_circuit_text("qubits 2\ncp 0 1 1100\n")
    gate = circuit.gates[0]
    assert gate.angle == 0.0
    unitary = circuit_service.circuit_to_unitary(circuit=circuit)
    assert (unitary == circuit_service.circuit_to_unitary(circuit=Circuit(n=2))).all()
