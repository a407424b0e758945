"""Verification and approximation comparison commands"""

import sys
import time
from typing import List, Optional

import numpy as np
import pandas as pd
from loguru import logger

from src.main.app.common.config.config_manager import load_config
from src.main.app.common.enums.enum import ConstantCode, ResponseCode
from src.main.app.common.util.matrix_util import (
    ComplexMatrix,
    identity,
    matmul_chain,
    max_entry_distance,
    max_vector_distance,
)
from src.main.app.exception.domain import CommandException, StepMatrixException
from src.main.app.factory.service_factory import (
    get_circuit_service,
    get_fourier_service,
    get_simulator_service,
    get_step_matrix_service,
)
from src.main.app.schema.report_schema import ApproxRow, CheckResult, RunReport


def cmd_verify(*, n: int, tolerance: Optional[float] = None, seed: Optional[int] = None) -> int:
    """
    Run every factorization check for one width and print the report as JSON.

    Covers unitarity of each P^(s), P^(s) = M^(s)N^(s) both from the closed forms and
    from the decomposition, the tensor form of M^(s), N^(s) as a product of controlled
    phases, the step route and the circuit route against the DFT oracle, and the FFT and
    the simulator on seeded random vectors.

    Args:
        n: Number of bits, 1 <= n <= 8.
        tolerance: Admitted error per check, the configured tolerance by default.
        seed: Seed of the random vectors, the configured seed by default.

    Returns:
        int: Exit status 0 when every check passes.

    Raises:
        CommandException: VERIFICATION_FAILED after printing a failing report.
    """
    _check_width(n)
    cli_config = load_config().cli
    tolerance = load_config().numerics.tolerance if tolerance is None else tolerance
    seed = cli_config.seed if seed is None else seed
    if not tolerance > 0:
        raise CommandException.of(ResponseCode.PARAMETER_ERROR, f"tolerance={tolerance} must be positive")
    started = time.perf_counter()
    fourier_service = get_fourier_service()
    step_service = get_step_matrix_service()
    circuit_service = get_circuit_service()

    checks: List[CheckResult] = []

    def check(name: str, error: float) -> None:
        checks.append(CheckResult(name=name, error=error, tolerance=tolerance))

    for s in range(n):
        p = step_service.build_p(n=n, s=s)
        check(f"P^({s}) unitary", max_entry_distance(p @ p.conj().T, identity(1 << n)))
        m_factor, n_factor = step_service.build_m(n=n, s=s), step_service.build_n(n=n, s=s)
        check(f"P^({s}) = M^({s})N^({s})", max_entry_distance(p, m_factor @ n_factor))
        try:
            decomposition = step_service.qr_decompose_step(p=p, n=n, s=s)
            check(f"qr of P^({s})", decomposition.max_residual)
        except StepMatrixException as e:
            logger.error(f"qr of P^({s}) failed: {e.msg}")
            check(f"qr of P^({s})", float("inf"))
        check(f"M^({s}) tensor form", max_entry_distance(m_factor, step_service.build_m_tensor(n=n, s=s)))
        check(f"N^({s}) = prod R", max_entry_distance(n_factor, _controlled_phase_product(n, s)))

    dft = fourier_service.dft_matrix(n=n)
    steps = step_service.transform_from_steps(n=n)
    circuit = circuit_service.synth_qft(n=n)
    unitary = circuit_service.circuit_to_unitary(circuit=circuit)
    check("step route vs DFT", max_entry_distance(steps, dft))
    check("circuit route vs step route", max_entry_distance(unitary, steps))
    check("circuit route vs DFT", max_entry_distance(unitary, dft))

    fft_error, simulator_error = _random_vector_errors(n, circuit, seed, cli_config.random_vectors)
    check("fft vs DFT on random vectors", fft_error)
    check("simulator vs fft on random vectors", simulator_error)

    report = RunReport(
        subcommand="verify",
        n=n,
        seed=seed,
        tolerance=tolerance,
        checks=checks,
        gate_counts=circuit_service.gate_counts(circuit=circuit),
        fft_operations=fourier_service.fft_operation_count(n=n),
        elapsed_seconds=time.perf_counter() - started,
    )
    sys.stdout.write(report.model_dump_json(indent=2) + "\n")
    logger.info(f"verify n={n}: max error {report.max_error:.3e}, passed={report.passed}")
    if not report.passed:
        names = ", ".join(failure.name for failure in report.failures())
        raise CommandException.of(ResponseCode.VERIFICATION_FAILED, names)
    return 0


def cmd_compare_approx(*, n: int) -> int:
    """
    Tabulate the approximate transform for m = 1..n against its phase error bound, then
    the minimum degree for each configured eps_max.

    Args:
        n: Number of bits, 1 <= n <= 8.

    Returns:
        int: Exit status 0 when every row is within its bound and the measured deviation
            never grows with m.
    """
    _check_width(n)
    fourier_service = get_fourier_service()
    circuit_service = get_circuit_service()
    exact = fourier_service.dft_matrix(n=n)

    rows = []
    for m in range(1, n + 1):
        deviation, modulus_error = phase_deviation(fourier_service.dft_matrix(n=n, m=m), exact)
        counts = circuit_service.gate_counts(circuit=circuit_service.synth_aqft(n=n, m=m))
        rows.append(
            ApproxRow(
                m=m,
                controlled_phases=counts.controlled_phases,
                measured_deviation=deviation,
                bound=fourier_service.phase_error_bound(n=n, m=m),
                modulus_error=modulus_error,
            )
        )
    table = pd.DataFrame([row.model_dump() for row in rows])
    sweep_rows = []
    for eps in load_config().cli.eps_sweep:
        min_m = fourier_service.min_m_for_error(eps_max=eps, n=n)
        sweep_rows.append({"eps_max": eps, "min_m": min_m, "bound": fourier_service.phase_error_bound(n=n, m=min_m)})
    sweep = pd.DataFrame(sweep_rows)
    sys.stdout.write(f"# approximate transform, n={n}, fft operations={fourier_service.fft_operation_count(n=n)}\n")
    sys.stdout.write(table.to_string(index=False) + "\n")
    sys.stdout.write("# minimum degree per admitted phase error\n")
    sys.stdout.write(sweep.to_string(index=False) + "\n")

    increases = np.diff(table["measured_deviation"].to_numpy())
    monotone = bool(np.all(increases <= load_config().numerics.strict_tolerance))
    logger.info(f"compare-approx n={n}: deviation non-increasing in m: {monotone}")
    if not table["within_bound"].all():
        raise CommandException.of(ResponseCode.VERIFICATION_FAILED, f"phase error bound exceeded for n={n}")
    if not monotone:
        raise CommandException.of(ResponseCode.VERIFICATION_FAILED, f"deviation grows with m for n={n}")
    return 0


def phase_deviation(approx: ComplexMatrix, exact: ComplexMatrix):
    """
    Largest phase difference and largest modulus error between two transform operators.

    Returns:
        Tuple of max |arg(approx_jk / exact_jk)| and max ||approx_jk| - 1/√N|.
    """
    size = exact.shape[0]
    deviation = float(np.max(np.abs(np.angle(approx / exact))))
    modulus_error = float(np.max(np.abs(np.abs(approx) - 1.0 / np.sqrt(size))))
    return deviation, modulus_error


def _controlled_phase_product(n: int, s: int) -> ComplexMatrix:
    step_service = get_step_matrix_service()
    factors = [step_service.build_r(n=n, s=s, t=t, u=t - s + 1) for t in range(s + 1, n)]
    return matmul_chain(factors) if factors else identity(1 << n)


def _random_vector_errors(n: int, circuit, seed: int, count: int):
    fourier_service = get_fourier_service()
    simulator_service = get_simulator_service()
    rng = np.random.default_rng(seed)
    fft_error = simulator_error = 0.0
    for _ in range(count):
        x = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
        x = x / np.linalg.norm(x)
        y = fourier_service.fft_classical(x=x)
        fft_error = max(fft_error, max_vector_distance(y, fourier_service.dft_direct(x=x)))
        state = simulator_service.run_circuit(state=simulator_service.prepare_state(x=x), circuit=circuit)
        simulator_error = max(simulator_error, max_vector_distance(state.amplitudes, y))
    return fft_error, simulator_error


def _check_width(n: int) -> None:
    if not 1 <= n <= ConstantCode.MAX_VERIFY_QUBITS:
        raise CommandException.of(ResponseCode.DIMENSION_LIMIT_EXCEEDED, f"n={n} outside [1, 8]")
