"""Command-line interface: ``exclstat {eval,charge,entropy,count,verify}``.

Tables go to stdout as CSV (default) or JSON (``--json``). Exit status is 0
on success, 1 when a verification fails and 2 for usage or domain errors.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field, replace
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import identities
from .charge import ChargeProblem, charge_both
from .errors import ExclStatError
from .genfun import Gentile, HaldaneWu, SeriesKind, coefficients, evaluate, log_value
from .numerics import Tolerances
from .thermo import count_states, entropy_closed_hw, entropy_generic, mu_max

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

TOLERANCE_KEYS = ("root_abs", "quad_abs", "series_tail", "max_iter")


def fmt(value) -> str:
    """Render a table cell with 17 significant digits (exact for integers)."""
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    if value is None:
        return "nan"
    return format(float(value), ".17g")


@dataclass
class OutputTable:
    columns: List[Tuple[str, str]]
    rows: List[tuple] = field(default_factory=list)

    def add(self, *row):
        if len(row) != len(self.columns):
            raise ValueError(f"row of arity {len(row)} for {len(self.columns)} columns")
        self.rows.append(tuple(row))

    def to_csv(self) -> str:
        header = ",".join(f"{name} [{unit}]" if unit else name for name, unit in self.columns)
        lines = [header] + [",".join(fmt(v) for v in row) for row in self.rows]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        def cell(v):
            if v is None:
                return None
            if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
                return int(v)
            v = float(v)
            return v if math.isfinite(v) else str(v)
        return json.dumps({"columns": [{"name": n, "unit": u} for n, u in self.columns],
                           "rows": [[cell(v) for v in row] for row in self.rows]}) + "\n"


# ---------------------------------------------------------------------------
# argument helpers


def read_config(path: str) -> dict:
    """Parse a ``key=value`` tolerance file; ``#`` starts a comment."""
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in TOLERANCE_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = int(value) if key == "max_iter" else float(value)
    return values


def tolerances_from_args(args) -> Tolerances:
    values = {}
    if getattr(args, "config", None):
        values.update(read_config(args.config))
    for key in TOLERANCE_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    return replace(Tolerances(), **values)


def parse_sweep(text: str) -> List[float]:
    """``start:stop:count`` -> ``count`` evenly spaced values."""
    try:
        start, stop, count = text.split(":")
        return [float(v) for v in np.linspace(float(start), float(stop), int(count))]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected start:stop:count, got {text!r}")


def stat_from_args(args, parser):
    if args.stat == "hw":
        if args.g is None:
            parser.error("--stat hw needs --g")
        return HaldaneWu(args.g)
    if args.G is None:
        parser.error("--stat gentile needs --G")
    return Gentile(args.G)


def _add_common(p):
    p.add_argument("--stat", choices=("hw", "gentile"), required=True)
    p.add_argument("--g", type=float, help="Haldane-Wu parameter")
    p.add_argument("--G", type=float, help="Gentile parameter")
    p.add_argument("--json", action="store_true", help="emit JSON instead of CSV")
    p.add_argument("--config", help="key=value file overriding tolerances")
    p.add_argument("--root-abs", dest="root_abs", type=float)
    p.add_argument("--quad-abs", dest="quad_abs", type=float)
    p.add_argument("--series-tail", dest="series_tail", type=float)
    p.add_argument("--max-iter", dest="max_iter", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exclstat",
        description="Generating functions, entropy and central charge of exclusion statistics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="generating function values or Taylor coefficients")
    _add_common(p)
    p.add_argument("--t-min", type=float, default=0.0)
    p.add_argument("--t-max", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=11, help="number of t points")
    p.add_argument("--log", action="store_true", help="emit ln f instead of f")
    p.add_argument("--coeffs", type=int, metavar="N",
                   help="emit the first N Taylor coefficients instead of values")
    p.add_argument("--kind", choices=[k.value for k in SeriesKind], default="f")
    p.add_argument("--m", type=int, help="power for f_pow_m / h_pow_m")

    p = sub.add_parser("charge", help="effective central charge by both routes")
    _add_common(p)
    p.add_argument("--phi", type=float, default=None)
    p.add_argument("--phi-sweep", type=parse_sweep)
    p.add_argument("--nu", type=float, help="fix g + phi (Haldane-Wu)")
    p.add_argument("--g-sweep", type=parse_sweep)

    p = sub.add_parser("entropy", help="entropy density on a filling grid")
    _add_common(p)
    p.add_argument("--mu-min", type=float)
    p.add_argument("--mu-max", type=float)
    p.add_argument("--steps", type=int, default=19)

    p = sub.add_parser("count", help="number of states W(N, n)")
    _add_common(p)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n", type=int, help="single particle number (default: all)")

    p = sub.add_parser("verify", help="run the identity and inequality checks")
    p.add_argument("--only", action="append", choices=sorted(identities.CHECKS),
                   help="restrict to a check group (repeatable)")
    p.add_argument("--tol", type=float, help="identity tolerance (default 1e-8)")
    p.add_argument("--g", type=float)
    p.add_argument("--phi", type=float)
    p.add_argument("--G", type=float)
    p.add_argument("--json", action="store_true", help="one JSON report per line")
    p.add_argument("--config", help="key=value file overriding tolerances")
    p.add_argument("--root-abs", dest="root_abs", type=float)
    p.add_argument("--quad-abs", dest="quad_abs", type=float)
    p.add_argument("--series-tail", dest="series_tail", type=float)
    p.add_argument("--max-iter", dest="max_iter", type=int)
    return parser


# ---------------------------------------------------------------------------
# commands


def cmd_eval(args, parser) -> OutputTable:
    stat = stat_from_args(args, parser)
    tol = tolerances_from_args(args)
    if args.coeffs is not None:
        if args.coeffs < 1:
            parser.error("--coeffs needs N >= 1")
        kind = SeriesKind(args.kind)
        series = coefficients(stat, kind, args.coeffs - 1, args.m)
        table = OutputTable([("n", ""), (kind.value, "")])
        for n, c in enumerate(series.coeffs):
            table.add(n, c)
        return table
    if args.steps < 1:
        parser.error("--steps must be >= 1")
    ts = np.linspace(args.t_min, args.t_max, args.steps) if args.steps > 1 else [args.t_min]
    name = "ln_f" if args.log else "f"
    table = OutputTable([("t", ""), (name, "")])
    for t in ts:
        t = float(t)
        value = log_value(stat, t, tol) if args.log else evaluate(stat, t, tol)
        table.add(t, value)
    return table


def cmd_charge(args, parser) -> OutputTable:
    tol = tolerances_from_args(args)
    if args.g_sweep is not None:
        if args.stat != "hw":
            parser.error("--g-sweep is for --stat hw")
        stats = [HaldaneWu(g) for g in args.g_sweep]
    else:
        stats = [stat_from_args(args, parser)]
    param = "g" if args.stat == "hw" else "G"
    table = OutputTable([(param, ""), ("phi", ""), ("x0", ""), ("y0", ""),
                         ("c_integral", ""), ("c_closed", ""), ("residual", "")])
    for stat in stats:
        if args.nu is not None:
            if not isinstance(stat, HaldaneWu):
                parser.error("--nu is for --stat hw")
            phis = [args.nu - stat.g]
        elif args.phi_sweep is not None:
            phis = args.phi_sweep
        else:
            phis = [0.0 if args.phi is None else args.phi]
        for phi in phis:
            result = charge_both(ChargeProblem(stat, phi), tol)
            value = stat.g if isinstance(stat, HaldaneWu) else stat.G
            table.add(value, phi, result.x0, result.y0, result.c_integral,
                      result.c_closed, result.residual)
    return table


def cmd_entropy(args, parser) -> OutputTable:
    stat = stat_from_args(args, parser)
    tol = tolerances_from_args(args)
    top = mu_max(stat)
    if args.mu_min is None or args.mu_max is None:
        if not math.isfinite(top):
            parser.error("bosons need explicit --mu-min and --mu-max")
        mus = [top * k / (args.steps + 1) for k in range(1, args.steps + 1)]
    else:
        mus = [float(v) for v in np.linspace(args.mu_min, args.mu_max, args.steps)]
    closed = isinstance(stat, HaldaneWu)
    columns = [("mu", ""), ("x", ""), ("s", "nats")]
    if closed:
        columns.append(("s_closed", "nats"))
    table = OutputTable(columns)
    for mu in mus:
        point = entropy_generic(stat, mu, tol)
        row = [mu, point.x, point.s]
        if closed:
            row.append(entropy_closed_hw(stat.g, mu))
        table.add(*row)
    return table


def cmd_count(args, parser) -> OutputTable:
    stat = stat_from_args(args, parser)
    if args.n is not None:
        ns = [args.n]
    elif isinstance(stat, Gentile):
        ns = range(int(stat.G) * args.N + 1)
    elif stat.g == 0:
        parser.error("bosons need an explicit --n")
    else:
        ns = range(int(math.floor((args.N - 1) / stat.g)) + 2)
    table = OutputTable([("N", ""), ("n", ""), ("W", ""), ("ln_W", "")])
    for n in ns:
        result = count_states(stat, args.N, n)
        table.add(args.N, n, result.W, result.log_W)
    return table


def cmd_verify(args) -> int:
    config = identities.SuiteConfig(tol=tolerances_from_args(args), g=args.g, phi=args.phi,
                                    G=args.G)
    if args.tol is not None:
        config.identity_tolerance = args.tol
    reports = identities.run_suite(args.only, config)
    out = sys.stdout
    if args.json:
        for report in reports:
            out.write(json.dumps(report.to_dict()) + "\n")
    else:
        out.write(f"{'status':8s} {'name':40s} {'max_residual':>12s} {'min_margin':>12s} "
                  f"{'tol':>8s}  grid\n")
        for r in reports:
            res = "-" if r.max_residual is None else f"{r.max_residual:.3e}"
            mar = "-" if r.min_margin is None else f"{r.min_margin:.3e}"
            out.write(f"{r.status:8s} {r.name:40s} {res:>12s} {mar:>12s} {r.tolerance:8.0e}  "
                      f"{r.grid_description}\n")
    failed = [r for r in reports if r.status == identities.FAILED]
    if not args.json:
        out.write(f"{len(reports) - len(failed)}/{len(reports)} reports without failure\n")
    return EXIT_FAIL if failed else EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        command = {"eval": cmd_eval, "charge": cmd_charge,
                   "entropy": cmd_entropy, "count": cmd_count}[args.command]
        table = command(args, parser)
    except (ExclStatError, ValueError) as exc:
        print(f"exclstat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(table.to_json() if args.json else table.to_csv())
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
