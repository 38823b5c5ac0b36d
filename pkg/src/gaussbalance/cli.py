"""
Command line interface.

    gaussbalance report  --nb 1 --nc 0.5 [--nth 0.2 --tau 0.5]
    gaussbalance sweep   --nb 1 --nth 0.2 [grid flags] --output sweep.csv
    gaussbalance tau-sep --nb 1 --nth 0.2 --pairs AB,AC --output tau_sep.csv
    gaussbalance verify  [--cutoff 60]

Exit status: 0 success, 1 usage error, 2 numeric failure.
Relative ``--output`` paths resolve against ``$GAUSSBALANCE_OUTPUT_DIR`` when set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .correlations import ORDERED_PAIRS, full_report
from .noise import ChannelParams
from .states import TripartiteParams
from .sweep import (
    SweepConfig,
    format_number,
    render_sweep,
    render_tau_sep,
    run_sweep,
    tau_sep_curve,
)
from .symplectic import UnphysicalStateError
from .verify import run_checks

OUTPUT_DIR_ENV = "GAUSSBALANCE_OUTPUT_DIR"

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _pairs(text: str) -> tuple[str, ...]:
    pairs = tuple(p.strip().upper() for p in text.split(",") if p.strip())
    bad = [p for p in pairs if p not in ORDERED_PAIRS]
    if bad or not pairs:
        raise argparse.ArgumentTypeError(f"pairs must be drawn from {','.join(ORDERED_PAIRS)}")
    return pairs


def _grid_flags(p: argparse.ArgumentParser) -> None:
    d = SweepConfig()
    p.add_argument("--nb", type=float, default=d.n_b)
    p.add_argument("--nth", type=float, default=d.n_th)
    p.add_argument("--delta-min", type=float, default=d.delta_min)
    p.add_argument("--delta-max", type=float, default=d.delta_max)
    p.add_argument("--delta-steps", type=int, default=d.delta_steps)
    p.add_argument("--pairs", type=_pairs, default=d.pairs)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", default=None, help="file path (default: stdout)")
    p.add_argument("--jobs", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gaussbalance", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    rep = sub.add_parser("report", help="all correlation quantities at one state point")
    rep.add_argument("--nb", type=float, required=True)
    rep.add_argument("--nc", type=float, required=True)
    rep.add_argument("--nth", type=float, default=0.0)
    rep.add_argument("--tau", type=float, default=0.0)
    rep.add_argument("--format", choices=("text", "csv", "json"), default="text")
    rep.add_argument("--output", default=None)

    sw = sub.add_parser("sweep", help="residuals on a (delta, tau) grid")
    _grid_flags(sw)
    d = SweepConfig()
    sw.add_argument("--tau-min", type=float, default=d.tau_min)
    sw.add_argument("--tau-max", type=float, default=d.tau_max)
    sw.add_argument("--tau-steps", type=int, default=d.tau_steps)

    ts = sub.add_parser("tau-sep", help="separability time versus delta")
    _grid_flags(ts)

    ver = sub.add_parser("verify", help="run conservation-law and Fock-oracle checks")
    ver.add_argument("--nb", type=float, default=1.0)
    ver.add_argument("--nc", type=float, default=0.5)
    ver.add_argument("--cutoff", type=int, default=60)
    return parser


def _resolve(path: str | None) -> Path | None:
    if path is None:
        return None
    out = Path(path)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not out.is_absolute():
        out = Path(base) / out
    return out


def _emit(text: str, path: str | None) -> None:
    out = _resolve(path)
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _report_text(rep, fmt: str) -> str:
    d = rep.as_dict()
    if fmt == "json":
        return json.dumps(d, indent=1) + "\n"
    rows = [(group, key, val) for group, table in d.items() for key, val in table.items()]
    if fmt == "csv":
        lines = ["quantity,key,value"]
        lines += [f"{g},{k},{format_number(v)}" for g, k, v in rows]
        return "\n".join(lines) + "\n"
    width = max(len(g) for g, _, _ in rows)
    return "".join(f"{g:<{width}}  {k:<3} {format_number(v)}\n" for g, k, v in rows)


def _sweep_config(args, with_tau: bool) -> SweepConfig:
    kw = dict(
        n_b=args.nb, n_th=args.nth,
        delta_min=args.delta_min, delta_max=args.delta_max, delta_steps=args.delta_steps,
        pairs=args.pairs, output_path=args.output, format=args.format, jobs=args.jobs,
    )
    if with_tau:
        kw.update(tau_min=args.tau_min, tau_max=args.tau_max, tau_steps=args.tau_steps)
    return SweepConfig(**kw)


def _run(args) -> int:
    if args.command == "report":
        rep = full_report(TripartiteParams(args.nb, args.nc), ChannelParams(args.nth, args.tau))
        _emit(_report_text(rep, args.format), args.output)
    elif args.command == "sweep":
        cfg = _sweep_config(args, with_tau=True)
        _emit(render_sweep(cfg, run_sweep(cfg)), cfg.output_path)
    elif args.command == "tau-sep":
        cfg = _sweep_config(args, with_tau=False)
        _emit(render_tau_sep(cfg, tau_sep_curve(cfg)), cfg.output_path)
    elif args.command == "verify":
        checks = run_checks(args.nb, args.nc, args.cutoff)
        for c in checks:
            status = "PASS" if c.passed else "FAIL"
            print(f"{status}  {c.name:<42} worst={c.worst:.3e}  tol={c.tol:.0e}")
        if not all(c.passed for c in checks):
            return EXIT_NUMERIC
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except UnphysicalStateError as exc:
        print(f"gaussbalance: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ValueError, KeyError) as exc:
        print(f"gaussbalance: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"gaussbalance: cannot write output: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
