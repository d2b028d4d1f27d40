"""Command-line interface.

Verbs: ``reproduce`` (catalogue experiments), ``certify`` (all certificates
for a state file), ``boundary`` (extrapolation boundary of a line), and
``discord`` (classicality decision), plus ``list``. Exit code is 0 iff every
comparison in the produced report passes.
"""

from __future__ import annotations

import argparse
import os
import sys

from .discord import classify
from .errors import QBoundaryError
from .experiments import (
    Report,
    catalogue,
    certify_report,
    report_csv,
    report_json,
    run_experiment,
)
from .geometry import StateLine, find_boundary
from .stateio import load_basis, load_state, save_state


def _color(text: str, code: str) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\x1b[{code}m{text}\x1b[0m"


def _print_report(report: Report, fmt: str) -> None:
    if fmt == "json":
        print(report_json(report))
        return
    if fmt == "csv":
        print(report_csv(report))
        return
    print(f"experiment: {report.experiment_id}")
    if report.params:
        print(f"params:     {report.params}")
    for key, val in report.info.items():
        print(f"  {key}: {val}")
    for c in report.comparisons:
        status = _color("PASS", "32") if c.passed else _color("FAIL", "31")
        print(
            f"  [{status}] {c.name}: computed={c.computed:.12g} "
            f"expected={c.expected:.12g} tol={c.tolerance:.3g}"
        )
        if not c.passed and c.provenance:
            print(f"          ({c.provenance})")
    overall = _color("PASS", "32") if report.passed else _color("FAIL", "31")
    print(f"result: {overall} ({report.runtime_ms} ms)")


def _parse_params(pairs) -> dict:
    params: dict = {}
    for pair in pairs or []:
        if "=" not in pair:
            raise QBoundaryError(f"--param expects key=value, got {pair!r}")
        key, raw = pair.split("=", 1)
        try:
            val: object = int(raw)
        except ValueError:
            try:
                val = float(raw)
            except ValueError:
                val = raw
        params[key.strip()] = val
    return params


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qboundary",
        description="Boundary geometry of bipartite quantum states: "
        "construction and certification.",
    )
    parser.add_argument("--tol", type=float, default=1e-9, help="certification tolerance")
    parser.add_argument("--json", action="store_true", help="emit stable JSON")
    parser.add_argument("--csv", action="store_true", help="emit CSV rows")
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized experiments")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reproduce", help="run a catalogue experiment")
    p.add_argument("experiment_id", metavar="id")
    p.add_argument("--param", action="append", metavar="k=v", help="override a parameter")

    p = sub.add_parser("certify", help="run all certificates on a state file")
    p.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p.add_argument("--raw", action="store_true", help="accept general Hermitian operators")
    p.add_argument("--basis", metavar="FILE", help="candidate A basis for classicality")

    p = sub.add_parser("boundary", help="extrapolation boundary of the line rho0 -> rho1")
    p.add_argument("--rho0", required=True, metavar="FILE")
    p.add_argument("--rho1", required=True, metavar="FILE")
    p.add_argument("--out", metavar="FILE", help="write the boundary state here")
    p.add_argument("--tol-t", type=float, default=1e-12, help="bisection tolerance on t")

    p = sub.add_parser("discord", help="classicality decision for a state file")
    p.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p.add_argument("--basis", metavar="FILE", help="candidate A basis (needed when degenerate)")

    sub.add_parser("list", help="list catalogue experiments")
    return parser


def _fmt_of(args) -> str:
    if args.json:
        return "json"
    if args.csv:
        return "csv"
    return "text"


def _cmd_reproduce(args) -> int:
    params = _parse_params(args.param)
    if args.seed is not None:
        params.setdefault("seed", args.seed)
    report = run_experiment(args.experiment_id, params)
    _print_report(report, _fmt_of(args))
    return 0 if report.passed else 1


def _cmd_certify(args) -> int:
    op = load_state(args.infile, raw=args.raw, tol=args.tol)
    basis = load_basis(args.basis) if args.basis else None
    report = certify_report(op, args.tol, candidate_basis=basis)
    _print_report(report, _fmt_of(args))
    return 0 if report.passed else 1


def _cmd_boundary(args) -> int:
    rho0 = load_state(args.rho0, tol=args.tol)
    rho1 = load_state(args.rho1, tol=args.tol)
    bp = find_boundary(StateLine(rho0, rho1), tol_t=args.tol_t)
    report = Report(experiment_id="boundary", params={"rho0": args.rho0, "rho1": args.rho1})
    report.info["t_b"] = bp.t_b
    report.info["void_degree"] = bp.void_degree
    if args.out:
        save_state(args.out, bp.state, metadata={"t_b": bp.t_b})
        report.info["out"] = args.out
    _print_report(report, _fmt_of(args))
    return 0


def _cmd_discord(args) -> int:
    rho = load_state(args.infile, tol=args.tol)
    basis = load_basis(args.basis) if args.basis else None
    verdict = classify(rho, tol=args.tol, candidate_basis=basis)
    report = Report(experiment_id="discord", params={"in": args.infile})
    report.info["status"] = verdict.status.value
    report.info["residual"] = verdict.residual
    if verdict.reason:
        report.info["reason"] = verdict.reason
    _print_report(report, _fmt_of(args))
    return 0


def _cmd_list(args) -> int:
    for key, desc in catalogue().items():
        print(f"{key:18s} {desc}")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "reproduce": _cmd_reproduce,
        "certify": _cmd_certify,
        "boundary": _cmd_boundary,
        "discord": _cmd_discord,
        "list": _cmd_list,
    }
    try:
        return handlers[args.command](args)
    except QBoundaryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
