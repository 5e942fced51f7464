"""Command-line front end: ``fermigate {gate-run,sweep,budget,selfcheck}``.

Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .budget import error_budget
from .config import ConfigError, RunConfig, canonical_config, load_config, parse_config
from .gate import CSV_COLUMNS, GateReport, run_gate
from .propagate import PropagationError
from .selfcheck import run_selfcheck
from .serialize import csv_text, dumps_json, format_float, write_atomic

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC = 0, 2, 3
SWEEP_COLUMNS = CSV_COLUMNS + ("error",)


def _load(args) -> RunConfig:
    cfg = load_config(args.config)
    data = cfg.model_dump(exclude={"derived"})
    if args.tol is not None:
        data["gate"]["tol"] = args.tol
    if args.threads is not None:
        data["threads"] = args.threads
    if args.out is not None:
        data["output"]["dir"] = args.out
    return parse_config(data)


def _out_path(cfg: RunConfig, suffix: str) -> Path:
    return Path(cfg.output.dir) / f"{cfg.output.prefix}{suffix}"


def cmd_gate_run(cfg: RunConfig, args) -> int:
    try:
        report = run_gate(cfg.gate.run_spec())
    except PropagationError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    timing = cfg.output.timing
    doc = {"config": canonical_config(cfg), "report": report.to_dict(timing)}
    write_atomic(_out_path(cfg, "_gate.json"), dumps_json(doc))
    write_atomic(_out_path(cfg, "_gate.csv"), csv_text(CSV_COLUMNS, [report.csv_row(timing)]))
    if args.json:
        sys.stdout.write(dumps_json(report.to_dict(timing)))
    else:
        print(f"phi_nl = {report.phi_nl:.6f} rad (predicted {report.phi_pred:.6f}), "
              f"f_mag = {report.f_mag:.6f}, f_swap = {report.f_swap:.6f}, D = {report.distortion:.3e}")
        for w in report.warnings:
            print(f"warning: {w}")
    return EXIT_OK


def sweep_points(cfg: RunConfig):
    """Sweep grid in fixed order: N outermost, then sigma/N, then V/(2J)."""
    sw = cfg.sweep
    axes = [
        sw.N if sw.N is not None else [None],
        sw.sigma_over_N if sw.sigma_over_N is not None else [None],
        sw.V_over_2J if sw.V_over_2J is not None else [None],
    ]
    return list(itertools.product(*axes))


def _sweep_point(cfg: RunConfig, point) -> GateReport:
    N, s, x = point
    try:
        return run_gate(cfg.gate.run_spec(N=N, sigma_over_N=s, V_over_2J=x))
    except (PropagationError, ValueError) as exc:
        base = cfg.gate.chain.N if N is None else N
        return GateReport(N=base, J=float("nan"), V=float("nan"), sigma=float("nan"),
                          tau=float("nan"), tol=cfg.gate.tol, error=str(exc))


def cmd_sweep(cfg: RunConfig, args) -> int:
    points = sweep_points(cfg)
    with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
        reports = list(pool.map(lambda p: _sweep_point(cfg, p), points))
    timing = cfg.output.timing
    rows = [{**r.csv_row(timing), "error": r.error} for r in reports]
    text = csv_text(SWEEP_COLUMNS, rows)
    write_atomic(_out_path(cfg, "_sweep.csv"), text)
    if args.json:
        sys.stdout.write(dumps_json([r.to_dict(timing) for r in reports]))
    else:
        sys.stdout.write(text)
    return EXIT_NUMERIC if any(r.error for r in reports) else EXIT_OK


def _budget_table(d: dict) -> str:
    units = {"p1": "", "p2": "", "p3": "", "v": "sites/s", "T": "s", "bandwidth": "rad/s", "Omega": "rad/s"}
    lines = ["quantity    value                    unit", "-" * 44]
    for key, unit in units.items():
        lines.append(f"{key:<11} {format_float(d[key]):<24} {unit}")
    lines.append("(order-of-magnitude estimates, coefficient 1)")
    return "\n".join(lines) + "\n"


def cmd_budget(cfg: RunConfig, args) -> int:
    report = error_budget(cfg.experiment.params())
    doc = {"config": canonical_config(cfg)["experiment"], "budget": report.to_dict()}
    write_atomic(_out_path(cfg, "_budget.json"), dumps_json(doc))
    sys.stdout.write(dumps_json(report.to_dict()) if args.json else _budget_table(report.to_dict()))
    return EXIT_OK


def cmd_selfcheck(args) -> int:
    results = run_selfcheck(sign_fault=args.inject_fault)
    if args.json:
        sys.stdout.write(dumps_json([r.to_dict() for r in results]))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status}  {r.name:<22} residual {r.residual:.3e}  (threshold {r.threshold:.0e})")
    return EXIT_OK if all(r.passed for r in results) else EXIT_NUMERIC


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="JSON run configuration")
    common.add_argument("--out", metavar="DIR", help="output directory (overrides output.dir)")
    common.add_argument("--echo-config", action="store_true", help="print the canonical config and exit")
    common.add_argument("--json", action="store_true", help="machine-readable stdout")
    common.add_argument("--tol", type=float, metavar="X", help="propagation tolerance")
    common.add_argument("--threads", type=int, metavar="K", help="sweep worker threads")

    parser = argparse.ArgumentParser(prog="fermigate", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("gate-run", parents=[common], help="run one gate")
    sub.add_parser("sweep", parents=[common], help="sweep V/(2J), N and sigma/N")
    sub.add_parser("budget", parents=[common], help="analytic error budget")
    check = sub.add_parser("selfcheck", parents=[common], help="run oracle self-checks")
    check.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "selfcheck" and not args.echo_config:
        return cmd_selfcheck(args)
    try:
        cfg = _load(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if args.echo_config:
        sys.stdout.write(json.dumps(canonical_config(cfg), indent=2, sort_keys=True) + "\n")
        return EXIT_OK
    commands = {"gate-run": cmd_gate_run, "sweep": cmd_sweep, "budget": cmd_budget}
    return commands[args.command](cfg, args)


if __name__ == "__main__":
    sys.exit(main())
