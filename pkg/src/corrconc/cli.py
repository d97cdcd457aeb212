"""Command-line front end.

Subcommands map one-to-one onto the library's capabilities:

    moments    exact moments, series vs quadrature
    table1     closed-form mean/sd/upper-bound columns next to simulation
    coverage   empirical coverage of the three sub-Gaussian intervals
    bounds     tail bounds at a given t, or intervals at a given alpha
    density    density values of the sample correlation

Every command emits one table as CSV (default), Markdown, or JSON
lines, with a fixed decimal precision so output is byte-stable across
runs and worker counts.  Exit codes: 0 ok, 2 usage, 3 numeric failure,
4 infeasible level.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from .approx import mean_approx, var_approx, variance_bounds
from .conc import TailBoundKind, coverage_interval, tail_bound, tail_bound_clamped
from .errors import InfeasibleLevelError, NumericError
from .exactdist import density_at, moment, moment_quadrature
from .mcsim import SimConfig, run_experiment
from .params import ModelParams, SeriesConfig

__all__ = ["OutputSpec", "main"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_INFEASIBLE = 4

_DEFAULT_SEED = 2023
_DEFAULT_RHO_LIST = (0.0, -0.25, 0.56, -0.75, 0.95)

_KIND_BY_FLAG = {
    "bernstein": TailBoundKind.BERNSTEIN,
    "c0": TailBoundKind.CONSERVATIVE,
    "c1": TailBoundKind.AGGRESSIVE,
    "c2": TailBoundKind.MEGA_AGGRESSIVE,
}


@dataclass(frozen=True)
class OutputSpec:
    """Where and how a table is written: format, destination path (None
    for standard output), and decimal places for floats."""

    format: str = "csv"
    destination: str | None = None
    precision: int = 3

    def __post_init__(self):
        if self.format not in ("csv", "markdown", "jsonl"):
            raise ValueError(f"unknown format {self.format!r}")
        if not 1 <= self.precision <= 15:
            raise ValueError(f"precision must lie in [1, 15], got {self.precision}")


def _fmt_cell(value, precision: int) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.{precision}f}"
    return str(value)


def _json_cell(value, precision: int):
    if isinstance(value, float):
        return round(value, precision)
    return value


def render_table(header: list[str], rows: list[dict], out: OutputSpec) -> str:
    if out.format == "jsonl":
        lines = [
            json.dumps({k: _json_cell(row[k], out.precision) for k in header})
            for row in rows
        ]
        return "\n".join(lines) + "\n"
    cells = [[_fmt_cell(row[k], out.precision) for k in header] for row in rows]
    if out.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(cells)
        return buf.getvalue()
    widths = [
        max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
        for i, h in enumerate(header)
    ]
    lines = [
        "| " + " | ".join(h.ljust(w) for h, w in zip(header, widths)) + " |",
        "|" + "|".join("-" * (w + 2) for w in widths) + "|",
    ]
    for r in cells:
        lines.append("| " + " | ".join(c.ljust(w) for c, w in zip(r, widths)) + " |")
    return "\n".join(lines) + "\n"


def write_table(header: list[str], rows: list[dict], out: OutputSpec) -> None:
    text = render_table(header, rows, out)
    if out.destination is None:
        sys.stdout.write(text)
    else:
        with open(out.destination, "w", newline="") as fh:
            fh.write(text)


def _parse_rho_list(text: str) -> list[float]:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad rho list {text!r}: {exc}")
    if not values:
        raise argparse.ArgumentTypeError("rho list is empty")
    for v in values:
        if not -1.0 <= v <= 1.0:
            raise argparse.ArgumentTypeError(f"rho {v} outside [-1, 1]")
    return values


def _default_seed() -> int:
    env = os.environ.get("CORRCONC_SEED")
    if env is None:
        return _DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise ValueError(f"CORRCONC_SEED is not an integer: {env!r}")


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "markdown", "jsonl"), default="csv")
    p.add_argument("--precision", type=int, default=3, help="decimal places (1-15)")
    p.add_argument("--out", metavar="PATH", default=None, help="write to PATH instead of stdout")


def _add_series_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=SeriesConfig().rel_tol,
                   help="relative series truncation tolerance")
    p.add_argument("--max-terms", type=int, default=SeriesConfig().max_terms,
                   help="series term cap")


def _add_sim_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--reps", type=int, default=10_000, help="number of replications")
    p.add_argument("--seed", type=int, default=None,
                   help="64-bit seed (default: CORRCONC_SEED or 2023)")
    p.add_argument("--workers", type=int, default=1,
                   help="worker processes; output is identical for any value")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corrconc",
        description="Exact distribution, approximations, concentration bounds, and "
                    "simulation for the Pearson sample correlation coefficient.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moments", help="exact moments: series vs quadrature")
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-max", type=int, default=4)
    _add_series_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("table1", help="closed-form columns next to a simulation")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--rho-list", type=_parse_rho_list,
                   default=list(_DEFAULT_RHO_LIST), metavar="R1,R2,...")
    _add_sim_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("coverage", help="empirical coverage of the sub-Gaussian intervals")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--rho-list", type=_parse_rho_list,
                   default=list(_DEFAULT_RHO_LIST), metavar="R1,R2,...")
    p.add_argument("--alpha", type=float, default=0.05)
    _add_sim_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("bounds", help="tail bounds at t, or intervals at alpha")
    p.add_argument("--rho", type=float, default=0.0)
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--t", type=float)
    group.add_argument("--alpha", type=float)
    p.add_argument("--kind", choices=sorted(_KIND_BY_FLAG), default=None,
                   help="restrict to one bound kind")
    _add_output_flags(p)

    p = sub.add_parser("density", help="density of the sample correlation")
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--r", type=float, action="append",
                       help="evaluation point (repeatable)")
    group.add_argument("--grid", type=int, metavar="K",
                       help="K evenly spaced interior points of [-1, 1]")
    _add_series_flags(p)
    _add_output_flags(p)

    return parser


def _series_config(args) -> SeriesConfig:
    return SeriesConfig(rel_tol=args.tol, max_terms=args.max_terms)


def _output_spec(args) -> OutputSpec:
    return OutputSpec(format=args.format, destination=args.out, precision=args.precision)


def _seed(args) -> int:
    return args.seed if args.seed is not None else _default_seed()


def cmd_moments(args) -> int:
    params = ModelParams(rho=args.rho, n=args.n)
    cfg = _series_config(args)
    rows = []
    for m in range(args.m_max + 1):
        res = moment(m, params, cfg)
        quad_val = moment_quadrature(m, params, cfg) if not params.is_degenerate else params.rho**m
        rows.append({
            "m": m,
            "series": res.value,
            "quadrature": quad_val,
            "terms_used": res.terms_used,
        })
    write_table(["m", "series", "quadrature", "terms_used"], rows, _output_spec(args))
    return EXIT_OK


def cmd_table1(args) -> int:
    seed = _seed(args)
    rows = []
    for rho in args.rho_list:
        params = ModelParams(rho=rho, n=args.n)
        summary = run_experiment(
            SimConfig(params=params, reps=args.reps, seed=seed), workers=args.workers
        )
        rows.append({
            "rho": rho,
            "e_r": mean_approx(params),
            "r_bar": summary.mean_r,
            "sd_r": var_approx(params) ** 0.5,
            "s_r": summary.sd_r,
            "ub": variance_bounds(params).upper_conservative ** 0.5,
        })
    write_table(["rho", "e_r", "r_bar", "sd_r", "s_r", "ub"], rows, _output_spec(args))
    return EXIT_OK


def cmd_coverage(args) -> int:
    seed = _seed(args)
    kinds = (TailBoundKind.CONSERVATIVE, TailBoundKind.AGGRESSIVE, TailBoundKind.MEGA_AGGRESSIVE)
    tags = ("c0", "c1", "c2")
    rows = []
    for rho in args.rho_list:
        params = ModelParams(rho=rho, n=args.n)
        summary = run_experiment(
            SimConfig(params=params, reps=args.reps, seed=seed, alpha=args.alpha),
            workers=args.workers,
        )
        row = {"rho": rho}
        for tag, kind in zip(tags, kinds):
            row[f"{tag}_pct"] = 100.0 * summary.coverage[kind]
        for tag, kind in zip(tags, kinds):
            iv = coverage_interval(kind, params, args.alpha)
            row[f"{tag}_lower"] = iv.lower
            row[f"{tag}_upper"] = iv.upper
            row[f"{tag}_clipped"] = iv.clipped
        for tag, kind in zip(tags, kinds):
            row[f"{tag}_pct_clipped"] = 100.0 * summary.coverage_clipped[kind]
        rows.append(row)
    header = ["rho"]
    header += [f"{t}_pct" for t in tags]
    for t in tags:
        header += [f"{t}_lower", f"{t}_upper", f"{t}_clipped"]
    header += [f"{t}_pct_clipped" for t in tags]
    write_table(header, rows, _output_spec(args))
    return EXIT_OK


def cmd_bounds(args) -> int:
    params = ModelParams(rho=args.rho, n=args.n)
    kinds = [_KIND_BY_FLAG[args.kind]] if args.kind else list(_KIND_BY_FLAG.values())
    rows = []
    if args.t is not None:
        for kind in kinds:
            rows.append({
                "kind": kind.value,
                "raw": tail_bound(kind, params, args.t),
                "clamped": tail_bound_clamped(kind, params, args.t),
            })
        write_table(["kind", "raw", "clamped"], rows, _output_spec(args))
    else:
        for kind in kinds:
            iv = coverage_interval(kind, params, args.alpha)
            rows.append({
                "kind": kind.value,
                "t": iv.half_width,
                "lower": iv.lower,
                "upper": iv.upper,
                "clipped": iv.clipped,
            })
        write_table(["kind", "t", "lower", "upper", "clipped"], rows, _output_spec(args))
    return EXIT_OK


def cmd_density(args) -> int:
    params = ModelParams(rho=args.rho, n=args.n)
    cfg = _series_config(args)
    if args.grid is not None:
        if args.grid < 1:
            raise ValueError(f"--grid must be >= 1, got {args.grid}")
        step = 2.0 / (args.grid + 1)
        points = [-1.0 + step * (i + 1) for i in range(args.grid)]
    else:
        points = args.r
    rows = [{"r": r, "density": density_at(params, r, cfg)} for r in points]
    write_table(["r", "density"], rows, _output_spec(args))
    return EXIT_OK


_COMMANDS = {
    "moments": cmd_moments,
    "table1": cmd_table1,
    "coverage": cmd_coverage,
    "bounds": cmd_bounds,
    "density": cmd_density,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InfeasibleLevelError as exc:
        print(f"corrconc: infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except NumericError as exc:
        print(f"corrconc: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ValueError, TypeError) as exc:
        print(f"corrconc: invalid arguments: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
