"""Benchmark CLI for the oscillator series solver.

Exit codes: 0 success, 2 usage error (argparse), 3 domain / tabulation
error, 4 oracle failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import approximants, oracle, report, svgplot
from .errors import DomainError, NotTabulatedError, OracleError
from .solver import oscillator_series


def _fmt(x: float) -> str:
    return "%.12e" % x


def cmd_series(args) -> int:
    sol = oscillator_series(args.beta, args.terms)
    rows = [(n, comp.terms[0][0], comp.terms[0][1]) for n, comp in enumerate(sol.components)]
    if args.format == "json":
        payload = {
            "beta": args.beta,
            "n_terms": args.terms,
            "components": [
                {"n": n, "degree": d, "scaled_coefficient": c} for n, d, c in rows
            ],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("n,degree,scaled_coefficient")
        for n, d, c in rows:
            print(f"{n},{d},{_fmt(c)}")
    return 0


def cmd_compare(args) -> int:
    methods = tuple(m.strip() for m in args.methods.split(",") if m.strip())
    rep = report.build_report(
        args.beta, t_max=args.t_max, dt=args.dt, methods=methods, n_terms=args.terms
    )
    with open(args.out, "w", newline="") as f:
        f.write(rep.to_csv())
    if args.json:
        with open(args.json, "w") as f:
            f.write(rep.to_json())
    for m, (max_abs, rms) in sorted(rep.errors.items()):
        print(f"{m}: max_abs={_fmt(max_abs)} rms={_fmt(rms)}")
    return 0


def cmd_sweep(args) -> int:
    csv = report.sweep_csv(args.beta_min, args.beta_max, args.steps)
    with open(args.out, "w", newline="") as f:
        f.write(csv)
    print(f"wrote {args.steps} rows to {args.out}")
    return 0


def cmd_plot(args) -> int:
    with open(args.infile) as f:
        rep = report.ComparisonReport.from_json(f.read())
    xs = list(rep.grid)
    series = {m: (xs, list(rep.columns[m])) for m in rep.method_names()}
    svg = svgplot.render_lines(series, title=f"Oscillator comparison, beta={rep.beta}")
    try:
        with open(args.out, "w") as f:
            f.write(svg)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_period(args) -> int:
    cfg = oracle.OracleConfig(t_end=args.t_end)
    print(_fmt(oracle.period(args.beta, cfg)))
    return 0


def cmd_dimensional(args) -> int:
    if args.omega0 <= 0 or args.c <= 0:
        raise DomainError("omega0 and c must be positive")
    p = oscillator_series(args.beta, args.terms).full_sum()
    print("t,x,t_dimensional,x_dimensional")
    n = int(round(args.t_max / args.dt))
    for i in range(n + 1):
        t = i * args.dt
        x = p.eval(t)
        print(",".join(_fmt(v) for v in (t, x, t / args.omega0, args.c * x / args.omega0)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ladm",
        description="Series solutions of the relativistic harmonic oscillator "
        "and comparisons against closed-form approximants and a "
        "high-order reference integrator.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", help="print the series coefficients")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--terms", type=int, default=report.DEFAULT_N_TERMS)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("compare", help="method-vs-method table against the oracle")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--t-max", type=float, default=10.0)
    p.add_argument("--dt", type=float, default=0.5)
    p.add_argument("--methods", default=",".join(report.ALL_METHODS))
    p.add_argument("--terms", type=int, default=report.DEFAULT_N_TERMS)
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--json", help="optional JSON report path")
    p.set_defaults(fn=cmd_compare)

    p = sub.add_parser("sweep", help="accuracy sweep over beta")
    p.add_argument("--beta-min", type=float, required=True)
    p.add_argument("--beta-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("plot", help="render a JSON report as SVG")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_plot)

    p = sub.add_parser("period", help="oscillation period from the oracle")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--t-end", type=float, default=30.0)
    p.set_defaults(fn=cmd_period)

    p = sub.add_parser("dimensional", help="map dimensionless samples to physical units")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--omega0", type=float, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--t-max", type=float, default=10.0)
    p.add_argument("--dt", type=float, default=0.5)
    p.add_argument("--terms", type=int, default=report.DEFAULT_N_TERMS)
    p.set_defaults(fn=cmd_dimensional)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (DomainError, NotTabulatedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OracleError as exc:
        print(f"oracle error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
