"""Circuit text format: emission and parsing"""

from typing import List

from pydantic import ValidationError

from src.main.app.common.enums.enum import ConstantCode, GateKind, ResponseCode
from src.main.app.exception.domain import CircuitParseException
from src.main.app.schema.circuit_schema import Circuit, ControlledPhase, Gate, Hadamard, Swap

HEADER = "qubits"
COMMENT = "#"

_ARITY = {GateKind.hadamard: 1, GateKind.controlled_phase: 3, GateKind.swap: 2}


def format_gate(gate: Gate) -> str:
    if isinstance(gate, Hadamard):
        return f"{GateKind.hadamard.value} {gate.target}"
    if isinstance(gate, ControlledPhase):
        return f"{GateKind.controlled_phase.value} {gate.control} {gate.target} {gate.u}"
    return f"{GateKind.swap.value} {gate.a} {gate.b}"


def emit_circuit_text(circuit: Circuit) -> str:
    """
    Render a circuit in the line format: a "qubits <n>" header, then one gate per line.

    Args:
        circuit: The circuit to render.

    Returns:
        str: LF-terminated text.
    """
    lines = [f"{HEADER} {circuit.n}"] + [format_gate(gate) for gate in circuit.gates]
    return "\n".join(lines) + "\n"


def parse_circuit_text(text: str) -> Circuit:
    """
    Parse the line format produced by emit_circuit_text.

    Lines starting with '#' and blank lines are ignored.

    Args:
        text: Circuit text.

    Returns:
        Circuit: The parsed circuit.

    Raises:
        CircuitParseException: On a syntax error, a declared width above the simulator limit,
            a qubit index outside the declared range or u < 1, reporting the offending line number.
    """
    n = None
    gates: List[Gate] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT):
            continue
        tokens = line.split()
        if n is None:
            if tokens[0] != HEADER or len(tokens) != 2:
                raise _syntax(line_no, f"expected '{HEADER} <n>', got '{line}'")
            n = _integer(tokens[1], line_no)
            if n < 1:
                raise _syntax(line_no, f"qubit count must be positive, got {n}")
            if n > ConstantCode.MAX_SIM_QUBITS:
                raise CircuitParseException(
                    ResponseCode.DIMENSION_LIMIT_EXCEEDED.code,
                    f"{ResponseCode.DIMENSION_LIMIT_EXCEEDED.msg}: {n} qubits, at most {ConstantCode.MAX_SIM_QUBITS}",
                    line_no,
                )
            continue
        gates.append(_parse_gate(tokens, line_no, n))
    if n is None:
        raise _syntax(0, f"missing '{HEADER} <n>' header")
    return Circuit(n=n, gates=tuple(gates))


def _parse_gate(tokens: List[str], line_no: int, n: int) -> Gate:
    try:
        kind = GateKind(tokens[0])
    except ValueError:
        raise _syntax(line_no, f"unknown gate '{tokens[0]}'")
    if len(tokens) - 1 != _ARITY[kind]:
        raise _syntax(line_no, f"'{kind.value}' takes {_ARITY[kind]} operands, got {len(tokens) - 1}")
    operands = [_integer(token, line_no) for token in tokens[1:]]
    qubits = operands[:2] if kind == GateKind.controlled_phase else operands
    for qubit in qubits:
        if qubit >= n:
            raise CircuitParseException(
                ResponseCode.QUBIT_OUT_OF_RANGE.code,
                f"{ResponseCode.QUBIT_OUT_OF_RANGE.msg}: qubit {qubit} of a {n}-qubit circuit",
                line_no,
            )
    if kind == GateKind.controlled_phase and operands[2] < 1:
        raise _syntax(line_no, f"phase exponent u must be >= 1, got {operands[2]}")
    try:
        if kind == GateKind.hadamard:
            return Hadamard(target=operands[0])
        if kind == GateKind.controlled_phase:
            return ControlledPhase(control=operands[0], target=operands[1], u=operands[2])
        return Swap(a=operands[0], b=operands[1])
    except ValidationError as e:
        raise _syntax(line_no, "; ".join(error["msg"] for error in e.errors()))


def _integer(token: str, line_no: int) -> int:
    if not (token.isascii() and token.isdigit()):
        raise _syntax(line_no, f"expected a non-negative integer, got '{token}'")
    return int(token)


def _syntax(line_no: int, detail: str) -> CircuitParseException:
    return CircuitParseException(
        ResponseCode.CIRCUIT_SYNTAX_ERROR.code, f"{ResponseCode.CIRCUIT_SYNTAX_ERROR.msg}: {detail}", line_no
    )
