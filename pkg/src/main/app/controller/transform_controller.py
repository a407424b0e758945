"""Synthesis, transform, simulation and decomposition commands"""

import sys
from typing import Optional

from loguru import logger

from src.main.app.common.config.config_manager import load_config
from src.main.app.common.enums.enum import CircuitFormat, ConstantCode, ResponseCode
from src.main.app.common.util import vector_file_util
from src.main.app.common.util.matrix_util import ComplexVector, format_complex, format_matrix
from src.main.app.exception.domain import CommandException
from src.main.app.factory.service_factory import (
    get_circuit_service,
    get_fourier_service,
    get_simulator_service,
    get_step_matrix_service,
)
from src.main.app.schema.circuit_schema import Circuit, GateCounts


def cmd_synth(
    *,
    n: int,
    m: Optional[int] = None,
    out: Optional[str] = None,
    fmt: CircuitFormat = CircuitFormat.text,
) -> int:
    """
    Synthesize the exact (m absent or m == n) or approximate transform circuit.

    The circuit goes to `out`, or to standard output when no path is given; the gate
    counts go to standard output after a file write and to standard error otherwise.

    Args:
        n: Number of qubits.
        m: Optional approximation degree.
        out: Output path.
        fmt: Text format of the circuit.

    Returns:
        int: Exit status 0.
    """
    circuit_service = get_circuit_service()
    if m is None or m == n:
        circuit = circuit_service.synth_qft(n=n)
    else:
        circuit = circuit_service.synth_aqft(n=n, m=m)
    if fmt == CircuitFormat.qasm:
        text = circuit_service.emit_qasm(circuit=circuit)
    else:
        text = circuit_service.emit_circuit_text(circuit=circuit)
    counts = format_gate_counts(circuit_service.gate_counts(circuit=circuit))
    if out is None:
        sys.stdout.write(text)
        sys.stderr.write(counts)
    else:
        write_text_file(out, text)
        sys.stdout.write(counts)
    logger.info(f"synthesized n={n} m={m}: {counts.strip()}")
    return 0


def cmd_fft(*, in_path: str, m: Optional[int] = None) -> int:
    """
    Classical FFT of a vector file, the truncated variant when m is given.

    Args:
        in_path: Vector file.
        m: Optional approximation degree.

    Returns:
        int: Exit status 0.
    """
    fourier_service = get_fourier_service()
    x = vector_file_util.read_vector_file(in_path)
    if m is None:
        y = fourier_service.fft_classical(x=x)
    else:
        y = fourier_service.fft_approx_classical(x=x, m=m)
    sys.stdout.write(vector_file_util.format_vector(y, load_config().cli.amplitude_digits))
    return 0


def cmd_simulate(*, in_path: str, circuit_path: str, normalize: bool = False) -> int:
    """
    Run a circuit file on the state read from a vector file and print the final amplitudes.

    Args:
        in_path: Vector file with 2^n amplitudes.
        circuit_path: Circuit text file over n qubits.
        normalize: Scale the input to unit norm instead of rejecting it.

    Returns:
        int: Exit status 0.
    """
    circuit = read_circuit_file(circuit_path)
    x = vector_file_util.read_vector_file(in_path)
    if x.shape[0] != 1 << circuit.n:
        raise CommandException.of(
            ResponseCode.QUBIT_COUNT_MISMATCH,
            f"vector of length {x.shape[0]} against a {circuit.n}-qubit circuit (length {1 << circuit.n})",
        )
    simulator_service = get_simulator_service()
    state = simulator_service.prepare_state(x=x, normalize=normalize)
    result = simulator_service.run_circuit(state=state, circuit=circuit)
    sys.stdout.write(vector_file_util.format_vector(result.amplitudes, load_config().cli.amplitude_digits))
    return 0


def cmd_decompose(*, n: int, s: int, m: Optional[int] = None) -> int:
    """
    Print P^(s), its factors M^(s) and N^(s) and the column scaling α as text grids.

    With m given the truncated diagonal factor of the approximate step is printed too.

    Args:
        n: Number of bits.
        s: Step index.
        m: Optional approximation degree.

    Returns:
        int: Exit status 0.
    """
    step_service = get_step_matrix_service()
    decomposition = step_service.qr_decompose_step(p=step_service.build_p(n=n, s=s), n=n, s=s)
    sections = [
        (f"P^({s})", format_matrix(decomposition.p)),
        (f"M^({s})", format_matrix(decomposition.m_factor)),
        (f"N^({s})", format_matrix(decomposition.n_factor)),
        ("alpha", format_matrix_row(decomposition.alpha)),
    ]
    if m is not None:
        sections.append((f"N^({s}) m={m}", format_matrix(step_service.build_n_approx(n=n, s=s, m=m))))
    for title, grid in sections:
        sys.stdout.write(f"# {title}\n{grid}")
    logger.info(f"decomposed P^({s}) for n={n}, max residual {decomposition.max_residual:.3e}")
    return 0


def read_circuit_file(path: str) -> Circuit:
    try:
        with open(path, encoding=ConstantCode.UTF_8) as f:
            text = f.read()
    except OSError as e:
        raise CommandException.of(ResponseCode.PARAMETER_ERROR, f"cannot read circuit {path}: {e.strerror}")
    return get_circuit_service().parse_circuit_text(text=text)


def write_text_file(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding=ConstantCode.UTF_8, newline="\n") as f:
            f.write(text)
    except OSError as e:
        raise CommandException.of(ResponseCode.FILE_WRITE_ERROR, f"{path}: {e.strerror}")


def format_gate_counts(counts: GateCounts) -> str:
    return (
        f"hadamards={counts.hadamards} controlled_phases={counts.controlled_phases} "
        f"swaps={counts.swaps} total={counts.total}\n"
    )


def format_matrix_row(values: ComplexVector) -> str:
    return " ".join(format_complex(z) for z in values) + "\n"
