"""Command-line front end: table reproduction, sweeps and verification.

Angles are given as multiples of pi (``--phi 0.25`` means pi/4). Evolution
probabilities accept a single value or a ``start:end:steps`` range.

Exit codes: 0 success, 1 verification failure, 2 argument error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import scan

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_ARG_ERROR = 2


def parse_p_spec(spec: str):
    """Parse ``--p``: either a single probability or start:end:steps."""
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise ValueError(f"bad p range {spec!r}, expected start:end:steps")
        start, end, steps = float(parts[0]), float(parts[1]), int(parts[2])
        if steps < 2:
            raise ValueError("p range needs at least 2 steps")
        values = np.linspace(start, end, steps)
    else:
        values = np.array([float(spec)])
    if values.min() < 0 or values.max() > 1:
        raise ValueError(f"p values from {spec!r} leave [0, 1]")
    return tuple(float(v) for v in values)


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _config(args, default_p="0.5"):
    return scan.ScanConfig(
        grid_n=args.grid,
        phi=args.phi * np.pi,
        varphi=args.varphi * np.pi,
        p_values=parse_p_spec(args.p if args.p is not None else default_p),
        out=args.out,
        fmt=args.format,
        seed=args.seed,
        samples=args.samples,
    )


def cmd_table1(args):
    rows = scan.table1_rows()
    fields = [
        "zeta", "c_ab", "f_max", "tau3",
        "c_ab_def", "f_max_def", "tau3_def", "route_discrepancy",
    ]
    if args.format == "csv":
        header = f"{'zeta':>10} {'C_AB':>10} {'F_max':>10} {'tau3':>10} {'max route dev':>14}"
        lines = [header]
        for row in rows:
            lines.append(
                f"{row['zeta']:10.6g} {row['c_ab']:10.6g} {row['f_max']:10.6g} "
                f"{row['tau3']:10.6g} {row['route_discrepancy']:14.3g}"
            )
        text = "\n".join(lines) + "\n" if args.out is None else scan.render(rows, fields, "csv")
    else:
        text = scan.render(rows, fields, "json")
    _emit(text, args.out)
    return EXIT_OK


def cmd_table2(args):
    rows = scan.table2_rows()
    fields = ["zeta_a_over_pi", "zeta_b_over_pi", "c_ab", "tau4", "f_max"]
    if args.format == "csv" and args.out is None:
        header = f"{'zeta_A/pi':>10} {'zeta_B/pi':>10} {'C_AB':>10} {'tau4':>10} {'F_max':>10}"
        lines = [header]
        for row in rows:
            lines.append(
                f"{row['zeta_a_over_pi']:10.6g} {row['zeta_b_over_pi']:10.6g} "
                f"{row['c_ab']:10.6g} {row['tau4']:10.6g} {row['f_max']:10.6g}"
            )
        text = "\n".join(lines) + "\n"
    else:
        text = scan.render(rows, fields, args.format)
    _emit(text, args.out)
    return EXIT_OK


def cmd_scan_3q(args):
    cfg = _config(args, default_p="0:1:41")
    rows = scan.scan_3q(cfg)
    _emit(scan.render(rows, ["p", "zeta", "c_ab", "f_max", "tau3"], cfg.fmt), cfg.out)
    return EXIT_OK


def cmd_ghz_vs_w(args):
    cfg = _config(args, default_p="0:1:101")
    rows = scan.ghz_vs_w(cfg.p_values)
    _emit(scan.render(rows, ["p", "f_ghz", "f_w"], cfg.fmt), cfg.out)
    return EXIT_OK


def cmd_triads(args):
    cfg = _config(args)
    records = scan.triads(cfg)
    rows = [vars(r) for r in records]
    fields = ["zeta_a", "zeta_b", "p", "phi", "varphi", "c_ab", "tau4", "f_max", "family"]
    _emit(scan.render(rows, fields, cfg.fmt), cfg.out)
    return EXIT_OK


def cmd_verify(args):
    lines = []
    ok = scan.verify(seed=args.seed, emit=lines.append, inject_failure=args.inject_failure)
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def build_parser():
    parser = argparse.ArgumentParser(
        prog="teleportality",
        description="Teleportation fidelity and multipartite entanglement "
        "under generalized noisy channels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--phi", type=float, default=0.25, help="phi as a multiple of pi")
        p.add_argument(
            "--varphi", type=float, default=0.0, help="varphi as a multiple of pi"
        )
        p.add_argument("--p", type=str, default=None, help="p value or start:end:steps")
        p.add_argument("--grid", type=int, default=128, help="grid points per axis")
        p.add_argument("--out", type=str, default=None, help="output path (default stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--samples", type=int, default=100_000)
        p.set_defaults(func=func)
        return p

    add("table1", cmd_table1, "single-channel table (phi=pi/4, varphi=0, p=0.8)")
    add("table2", cmd_table2, "two-channel table (phi=pi/4, varphi=0, p=0.5)")
    add("scan-3q", cmd_scan_3q, "sweep (p, zeta) for the single-channel case")
    add("ghz-vs-w", cmd_ghz_vs_w, "fidelity along the GHZ and W trajectories")
    add("triads", cmd_triads, "(C_AB, tau4, F) over a zeta_A x zeta_B grid")
    p_verify = add("verify", cmd_verify, "run the full cross-route verification suite")
    p_verify.add_argument(
        "--inject-failure",
        action="store_true",
        help="corrupt a tolerance to exercise the failure path",
    )
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARG_ERROR
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_ARG_ERROR


if __name__ == "__main__":
    sys.exit(main())
