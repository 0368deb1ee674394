"""Command-line front end.

Subcommands map one-to-one onto the library: ``state-info`` (squeezed-
displaced state moments), ``ppm-operator`` (symmetry operator, projectors and
phase matrix), ``srm`` (detection statistics from a Gram matrix or a
constellation file), ``ppm-sweep`` (error probability versus photon budget,
optionally rendered to a figure) and ``oracle`` (analytic-versus-brute-force
overlap comparison).

Exit codes: 0 success, 1 numeric failure, 2 usage, 3 size cap, 4 invalid Gram
matrix, 5 empty feasible range, 6 truncated basis too small.
"""

import argparse
import json
import math
import sys

import numpy as np

from . import __version__
from .fock import TruncationError, oracle_overlap
from .gus import (
    Constellation,
    SizeLimitError,
    ppm_phase_matrix,
    ppm_projectors,
    ppm_symmetry_operator,
)
from .linalg import matrix_function_hermitian
from .overlaps import SingleModeParams, gamma_vacuum_overlap
from .ppm import EmptyFeasibleRangeError, pe_sweep, sweep_to_csv
from .srm import InvalidGramError, gram_from_constellation, gram_from_json, is_circulant, srm_circulant, srm_generic
from .states import mean_photon_number, symplectic_eigenvalues
from .unitaries import generate_pure_state

EXIT_NUMERIC = 1
EXIT_USAGE = 2
EXIT_SIZE = 3
EXIT_GRAM = 4
EXIT_RANGE = 5
EXIT_TRUNCATION = 6


def parse_complex(text):
    """Parse 're,im' (or a bare real) into a complex number."""
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}")


def parse_angle(text):
    """Parse an angle in radians; accepts 'pi' literals like 'pi', '-pi/2', '0.5pi'."""
    cleaned = text.strip().lower().replace(" ", "")
    if "pi" not in cleaned:
        return float(cleaned)
    head, _, tail = cleaned.partition("pi")
    try:
        factor = 1.0
        if head in ("", "+"):
            pass
        elif head == "-":
            factor = -1.0
        else:
            factor = float(head.rstrip("*"))
        if tail:
            if not tail.startswith("/"):
                raise ValueError
            factor /= float(tail[1:])
        return factor * math.pi
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse angle {text!r}") from None


def _write_output(args, text):
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _complex_matrix_payload(matrix):
    matrix = np.asarray(matrix, dtype=complex)
    return {"re": matrix.real.tolist(), "im": matrix.imag.tolist()}


def _complex_csv(matrix):
    lines = []
    for row in np.asarray(matrix, dtype=complex):
        lines.append(",".join(f"{c.real:.12e}{c.imag:+.12e}j" for c in row))
    return "\n".join(lines) + "\n"


def cmd_state_info(args):
    alphas = [args.alpha] * args.modes
    z = np.diag([args.z] * args.modes) if args.modes > 1 else args.z
    state = generate_pure_state(z, alphas)
    payload = {
        "modes": state.num_modes,
        "mean": state.mean.tolist(),
        "cov": state.cov.tolist(),
        "symplectic_eigenvalues": symplectic_eigenvalues(state.cov).tolist(),
        "mean_photon_number": mean_photon_number(state),
    }
    _write_output(args, json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_ppm_operator(args):
    Q = ppm_symmetry_operator(args.K, args.n)
    if args.emit == "q":
        if args.format == "csv":
            text = "\n".join(",".join(str(v) for v in row) for row in Q) + "\n"
        else:
            text = json.dumps({"q": Q.tolist()}) + "\n"
        _write_output(args, text)
        return 0
    if args.emit == "projectors":
        projectors = ppm_projectors(Q, args.K)
        if args.format == "csv":
            text = "\n".join(_complex_csv(P) for P in projectors)
        else:
            text = json.dumps({"projectors": [_complex_matrix_payload(P) for P in projectors]}) + "\n"
        _write_output(args, text)
        return 0
    phi = ppm_phase_matrix(Q, args.K)
    reconstructed = matrix_function_hermitian(phi, lambda x: np.exp(1j * x))
    residual = float(np.max(np.abs(reconstructed - Q)))
    print(f"exp_residual={residual:.3e}", file=sys.stderr)
    if args.format == "csv":
        text = _complex_csv(phi)
    else:
        text = json.dumps({"phi": _complex_matrix_payload(phi), "exp_residual": residual}) + "\n"
    _write_output(args, text)
    return 0


def cmd_srm(args):
    if args.gram:
        with open(args.gram, encoding="utf-8") as handle:
            G = gram_from_json(handle.read())
    else:
        with open(args.constellation, encoding="utf-8") as handle:
            constellation = Constellation.from_json(handle.read())
        G = gram_from_constellation(constellation)
    if is_circulant(G):
        report = srm_circulant(G[0])
    else:
        report = srm_generic(G)
    _write_output(args, report.to_json() + "\n")
    return 0


def cmd_ppm_sweep(args):
    rows = pe_sweep(args.K, args.r, args.theta, (args.nr_min, args.nr_max), args.points)
    header = None if args.no_header else f"gausym {__version__}"
    _write_output(args, sweep_to_csv(rows, header=header))
    if args.plot:
        from .plotting import save_error_probability_plot

        label = f"K={args.K}, r={args.r}, theta={args.theta:g}"
        save_error_probability_plot({label: rows}, args.plot)
    return 0


def cmd_oracle(args):
    analytic = gamma_vacuum_overlap(args.r, args.theta, args.alpha)
    overlap = oracle_overlap(
        SingleModeParams(args.r, args.theta, args.alpha), SingleModeParams(), dim=args.dim
    )
    brute = abs(overlap) ** 2
    payload = {
        "gamma_analytic": analytic,
        "gamma_oracle": brute,
        "abs_difference": abs(analytic - brute),
        "dim": args.dim,
    }
    _write_output(args, json.dumps(payload, indent=2) + "\n")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gausym",
        description="Gaussian-state constellations and square-root-measurement detection",
    )
    parser.add_argument("--version", action="version", version=f"gausym {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("state-info", help="moments of a squeezed-displaced state")
    p.add_argument("--z", type=parse_complex, default=0j, help="squeeze parameter as re,im")
    p.add_argument("--alpha", type=parse_complex, default=0j, help="displacement as re,im")
    p.add_argument("--modes", type=int, default=1, help="replicate the parameters over N modes")
    p.add_argument("--output", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_state_info)

    p = sub.add_parser("ppm-operator", help="PPM symmetry operator and its spectral pieces")
    p.add_argument("--K", type=int, required=True, help="PPM order (number of slots)")
    p.add_argument("--n", type=int, required=True, help="dimension per slot")
    p.add_argument("--emit", choices=["q", "phi", "projectors"], default="q")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--output", help="write here instead of stdout")
    p.set_defaults(func=cmd_ppm_operator)

    p = sub.add_parser("srm", help="square-root-measurement statistics")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--gram", help="JSON file with {re: [[...]], im: [[...]]}")
    group.add_argument("--constellation", help="constellation JSON file")
    p.add_argument("--output", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_srm)

    p = sub.add_parser("ppm-sweep", help="PPM error probability vs photons per bit")
    p.add_argument("--K", type=int, required=True, help="PPM order")
    p.add_argument("--r", type=float, default=0.0, help="squeeze magnitude")
    p.add_argument("--theta", type=parse_angle, default=math.pi, help="squeeze phase (accepts 'pi')")
    p.add_argument("--nr-min", type=float, required=True, help="smallest photons per bit")
    p.add_argument("--nr-max", type=float, required=True, help="largest photons per bit")
    p.add_argument("--points", type=int, default=50, help="grid points (logarithmic)")
    p.add_argument("--output", help="write CSV here instead of stdout")
    p.add_argument("--plot", help="also render the sweep to this image file")
    p.add_argument("--no-header", action="store_true", help="omit the version header line")
    p.set_defaults(func=cmd_ppm_sweep)

    p = sub.add_parser("oracle", help="analytic vs brute-force pulse-vacuum overlap")
    p.add_argument("--r", type=float, required=True, help="squeeze magnitude")
    p.add_argument("--theta", type=parse_angle, default=0.0, help="squeeze phase (accepts 'pi')")
    p.add_argument("--alpha", type=float, required=True, help="real displacement")
    p.add_argument("--dim", type=int, default=60, help="truncated basis size")
    p.add_argument("--output", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TruncationError as exc:
        hint = f"; try --dim {exc.suggested_dim}" if exc.suggested_dim else ""
        print(f"error: {exc}{hint}", file=sys.stderr)
        return EXIT_TRUNCATION
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except InvalidGramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GRAM
    except EmptyFeasibleRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
