"""Routing of subcommands"""

import argparse

from src.main.app.common.enums.enum import CircuitFormat
from src.main.app.controller.transform_controller import cmd_decompose, cmd_fft, cmd_simulate, cmd_synth
from src.main.app.controller.verify_controller import cmd_compare_approx, cmd_verify


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qftctl",
        description="Synthesize and verify quantum Fourier transform circuits derived from the radix-2 FFT",
    )
    parser.add_argument(
        "-e",
        "--env",
        type=str,
        default=None,
        help="Specify the environment for the project",
    )
    parser.add_argument(
        "-c",
        "--config_file",
        type=str,
        default=None,
        help="Path to a custom configuration file",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    synth = subparsers.add_parser("synth", help="Write an exact or approximate transform circuit")
    synth.add_argument("--n", type=int, required=True, help="Number of qubits")
    synth.add_argument("--m", type=int, default=None, help="Approximation degree, exact when omitted")
    synth.add_argument("--out", type=str, default=None, help="Output file, standard output when omitted")
    synth.add_argument(
        "--format",
        dest="fmt",
        type=CircuitFormat,
        choices=list(CircuitFormat),
        default=CircuitFormat.text,
        help="Circuit text format",
    )
    synth.set_defaults(handler=lambda args: cmd_synth(n=args.n, m=args.m, out=args.out, fmt=args.fmt))

    fft = subparsers.add_parser("fft", help="Classical FFT of a vector file")
    fft.add_argument("--in", dest="in_path", type=str, required=True, help="Vector file")
    fft.add_argument("--m", type=int, default=None, help="Approximation degree of the truncated FFT")
    fft.set_defaults(handler=lambda args: cmd_fft(in_path=args.in_path, m=args.m))

    simulate = subparsers.add_parser("simulate", help="Run a circuit file on a vector file")
    simulate.add_argument("--in", dest="in_path", type=str, required=True, help="Vector file")
    simulate.add_argument("--circuit", type=str, required=True, help="Circuit text file")
    simulate.add_argument("--normalize", action="store_true", help="Scale the input to unit norm")
    simulate.set_defaults(
        handler=lambda args: cmd_simulate(in_path=args.in_path, circuit_path=args.circuit, normalize=args.normalize)
    )

    verify = subparsers.add_parser("verify", help="Check every factorization step against the DFT")
    verify.add_argument("--n", type=int, required=True, help="Number of bits, at most 8")
    verify.add_argument("--tolerance", type=float, default=None, help="Admitted entrywise error")
    verify.add_argument("--seed", type=int, default=None, help="Seed of the random test vectors")
    verify.set_defaults(handler=lambda args: cmd_verify(n=args.n, tolerance=args.tolerance, seed=args.seed))

    compare = subparsers.add_parser("compare-approx", help="Tabulate the approximate transform per degree")
    compare.add_argument("--n", type=int, required=True, help="Number of bits, at most 8")
    compare.set_defaults(handler=lambda args: cmd_compare_approx(n=args.n))

    decompose = subparsers.add_parser("decompose", help="Print P, M, N and alpha of one step")
    decompose.add_argument("--n", type=int, required=True, help="Number of bits")
    decompose.add_argument("--s", type=int, required=True, help="Step index")
    decompose.add_argument("--m", type=int, default=None, help="Also print the truncated diagonal factor")
    decompose.set_defaults(handler=lambda args: cmd_decompose(n=args.n, s=args.s, m=args.m))

    return parser
