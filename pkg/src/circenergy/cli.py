"""Command-line front end: single queries, sweeps, verification grids.

Output conventions
------------------
Single queries print one JSON object; sweeps emit CSV (default) or a
JSON array with the same field names.  Floats are serialized at 15
significant digits so artifacts are diff-stable across runs.  Exit
codes: 0 success, 1 verification failure, 2 argument error, 3 I/O
error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from typing import TextIO

from . import __version__, closed_form, spectrum
from . import sweep as sweep_mod

CSV_HEADER = (
    "n",
    "gamma",
    "energy_closed",
    "energy_direct",
    "abs_diff",
    "kn_energy",
    "hyperenergetic",
)


def _round15(x: float) -> float:
    """Shortest float that round-trips 15 significant digits of x."""
    return float(f"{x:.15g}")


def _print_record(record: dict) -> None:
    json.dump(record, sys.stdout, indent=2)
    print()


def _row_object(row: sweep_mod.SweepRow) -> dict:
    return {
        "n": row.n,
        "gamma": row.gamma,
        "energy_closed": _round15(row.energy_closed),
        "energy_direct": _round15(row.energy_direct),
        "abs_diff": _round15(row.abs_diff),
        "kn_energy": _round15(row.kn_energy),
        "hyperenergetic": row.hyperenergetic,
    }


def _write_rows(rows: list[sweep_mod.SweepRow], stream: TextIO, fmt: str) -> None:
    if fmt == "json":
        json.dump([_row_object(r) for r in rows], stream, indent=2)
        stream.write("\n")
        return
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(
            [
                str(row.n),
                str(row.gamma),
                f"{row.energy_closed:.15g}",
                f"{row.energy_direct:.15g}",
                f"{row.abs_diff:.15g}",
                f"{row.kn_energy:.15g}",
                "true" if row.hyperenergetic else "false",
            ]
        )


def cmd_energy(args: argparse.Namespace) -> int:
    try:
        if args.method == "closed":
            energy = closed_form.circulant_energy(args.n, args.gamma)
            hyper = closed_form.is_hyperenergetic(energy, args.n)
        else:
            spec = spectrum.CirculantSpec(args.n, (1, args.gamma))
            report = (
                spectrum.energy_direct(spec)
                if args.method == "direct"
                else spectrum.energy_matrix(spec)
            )
            energy, hyper = report.energy, report.hyperenergetic
    except ValueError as exc:
        raise ValueError(f"{exc} for method={args.method}") from None
    _print_record(
        {
            "n": args.n,
            "gamma": args.gamma,
            "method": args.method,
            "energy": _round15(energy),
            "kn_energy": _round15(spectrum.kn_energy(args.n)),
            "hyperenergetic": hyper,
            "version": __version__,
        }
    )
    return 0


def cmd_knh(args: argparse.Namespace) -> int:
    try:
        if args.method == "closed":
            energy = closed_form.energy_knh_closed(args.n)
            hyper = closed_form.is_hyperenergetic(energy, args.n)
        else:
            report = spectrum.knh_energy_direct(args.n)
            energy, hyper = report.energy, report.hyperenergetic
    except ValueError as exc:
        raise ValueError(f"{exc} for method={args.method}") from None
    _print_record(
        {
            "n": args.n,
            "method": args.method,
            "energy": _round15(energy),
            "kn_energy": _round15(spectrum.kn_energy(args.n)),
            "hyperenergetic": hyper,
            "version": __version__,
        }
    )
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    mode = {"n": "vary-n", "gamma": "vary-gamma", "knh": "knh"}[args.vary]
    if mode == "vary-n" and args.gamma is None:
        raise ValueError("sweep --vary n requires --gamma")
    if mode == "vary-gamma" and args.n is None:
        raise ValueError("sweep --vary gamma requires --n")
    fixed = {"vary-n": args.gamma, "vary-gamma": args.n, "knh": 0}[mode]
    config = sweep_mod.SweepConfig(
        mode=mode, fixed=fixed, lo=args.lo, hi=args.hi, step=args.step, fmt=args.format
    )
    rows = sweep_mod.run_config(config)
    assert isinstance(rows, list)
    worst = max((row.abs_diff for row in rows), default=0.0)
    summary = f"rows={len(rows)} worst_abs_diff={worst:.3e}"
    if args.out is None:
        _write_rows(rows, sys.stdout, args.format)
        print(summary, file=sys.stderr)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            _write_rows(rows, fh, args.format)
        print(summary)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    summary = sweep_mod.run_verify_grid(args.gamma_max, args.n_max, args.tol)
    print(
        f"checked={summary.checked} corollary={summary.corollary_checked} "
        f"knh={summary.knh_checked} worst_diff={summary.worst_diff:.3e} "
        f"failures={len(summary.failures)}"
    )
    for failure in summary.failures[:20]:
        print(
            f"  {failure.kind} n={failure.n} gamma={failure.gamma} "
            f"alpha={failure.alpha} diff={failure.diff:.3e}",
            file=sys.stderr,
        )
    if len(summary.failures) > 20:
        print(f"  ... {len(summary.failures) - 20} more", file=sys.stderr)
    return 0 if summary.passed else 1


def cmd_roots(args: argparse.Namespace) -> int:
    fractions = closed_form.cos_sum_root_fractions(args.gamma)
    roots = []
    for frac in fractions:
        x = float(frac) * math.pi
        roots.append(
            {
                "angle": f"{frac} pi",
                "radians": _round15(x),
                "residual": _round15(abs(math.cos(x) + math.cos(args.gamma * x))),
            }
        )
    _print_record(
        {
            "gamma": args.gamma,
            "count": len(roots),
            "roots": roots,
            "version": __version__,
        }
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circenergy",
        description=(
            "Graph energy of circulant graphs: Dirichlet-kernel closed forms, "
            "spectral oracles, parameter sweeps."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("energy", help="energy of C(1,gamma; n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--method", choices=("closed", "direct", "matrix"), default="closed")
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("knh", help="energy of K_n minus a Hamilton cycle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("closed", "direct"), default="closed")
    p.set_defaults(func=cmd_knh)

    p = sub.add_parser("sweep", help="tabulate energies over a parameter range")
    p.add_argument("--vary", choices=("n", "gamma", "knh"), required=True)
    p.add_argument("--n", type=int, default=None, help="fixed n for --vary gamma")
    p.add_argument("--gamma", type=int, default=None, help="fixed gamma for --vary n")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="closed form vs oracle agreement grid")
    p.add_argument("--gamma-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("roots", help="roots of cos x + cos gamma*x on (0, pi]")
    p.add_argument("--gamma", type=int, required=True)
    p.set_defaults(func=cmd_roots)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
