"""Command-line front end: ``urkit tetrad | lie | cosmic | check | multiplicity``.

Exit codes: 0 when every check passes (a ``DISCREPANCY`` against a quoted
claim is reported, not failed), 1 on a verification failure, 2 on usage or
configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__, checks, cosmic
from .checks import Record
from .errors import ParameterError, UrkitError

FORMATS = ("table", "records")
DEFAULT_SWEEP = 1000
DEFAULT_N = 4


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--backend", choices=checks.BACKENDS, default=checks.FLOAT, help="numeric backend for sweeps (default: float)")
    p.add_argument("--seed", type=int, default=0, help="random seed (default: 0)")
    p.add_argument("--sweep", type=int, default=DEFAULT_SWEEP, help=f"random cases per sweep (default: {DEFAULT_SWEEP})")
    p.add_argument("--format", choices=FORMATS, default="table", help="table or JSON-lines records")
    p.add_argument("--params", metavar="PATH", help="cosmology parameter file (key = value lines)")
    p.add_argument("--mode", choices=cosmic.MODES, default=cosmic.OOM, help="cosmic reporting mode (default: oom)")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="urkit", description="Spinor, ur-algebra and large-number verification suite.")
    parser.add_argument("--version", action="version", version=f"urkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    sub.add_parser("tetrad", parents=[common], help="null map, double cover and tetrad sweeps")
    sub.add_parser("lie", parents=[common], help="bracket engine, closure of the quantised tetrad, number operator")
    sub.add_parser("cosmic", parents=[common], help="large-number table and holographic comparison")
    sub.add_parser("check", parents=[common], help="field identities and multiplicity sum rules")
    m = sub.add_parser("multiplicity", parents=[common], help="spin multiplicities in N spin-1/2 factors")
    m.add_argument("--n", type=int, default=DEFAULT_N, help=f"number of spin-1/2 factors (default: {DEFAULT_N})")
    return parser


def _run(args: argparse.Namespace, params: cosmic.CosmologyParams | None) -> list[Record]:
    cmd = args.command
    if cmd == "tetrad":
        recs = checks.tetrad_records(args.seed, args.sweep, args.backend)
    elif cmd == "lie":
        recs = checks.lie_records(args.seed, args.sweep, structure=args.format == "records")
    elif cmd == "cosmic":
        recs = checks.cosmic_records(params, args.mode)
    elif cmd == "check":
        return checks.check_records(args.seed, args.sweep, args.backend, inject_fault=args.inject_fault)
    else:
        recs = checks.multiplicity_records(args.n)
    if args.inject_fault:
        recs.append(Record("harness.injected_fault", True, checks.FAIL, {}, False))
    return recs


def _run_record(args: argparse.Namespace) -> Record:
    inputs = {"command": args.command, "seed": args.seed, "backend": args.backend, "sweep": args.sweep, "mode": args.mode}
    if args.params:
        inputs["params"] = args.params
    if args.command == "multiplicity":
        inputs["n"] = args.n
    return Record("run", __version__, checks.INFO, inputs)


def _short(value) -> str:
    v = checks.jsonable(value)
    if isinstance(v, dict) and "summary" in v:
        return v["summary"]
    if isinstance(v, dict):
        v = {k: x for k, x in v.items() if k != "structure_constants"}
    return v if isinstance(v, str) else json.dumps(v, sort_keys=True)


def render_table(records: Sequence[Record], seed: int) -> str:
    lines = [f"seed: {seed}"]
    width = max(len(r.name) for r in records)
    for r in records:
        line = f"{r.verdict:<11} {r.name:<{width}}  {_short(r.value)}"
        if r.expected is not None and r.verdict != checks.INFO:
            line += f"  (expected {_short(r.expected)})"
        lines.append(line)
        if r.name == "lie.tetrad_closure":
            lines.append(f"{'':<11} {'':<{width}}  claimed: {checks.CLAIMED_DIMENSION}, measured: {r.value['dimension']}")
    counts = {v: sum(r.verdict == v for r in records) for v in checks.VERDICTS}
    lines.append(", ".join(f"{n} {v}" for v, n in counts.items() if n))
    return "\n".join(lines)


def render_records(records: Sequence[Record]) -> str:
    return "\n".join(r.to_json() for r in records)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.sweep < 1:
        print("urkit: error: --sweep must be >= 1", file=sys.stderr)
        return 2
    if args.command == "multiplicity" and args.n < 1:
        print("urkit: error: --n must be >= 1", file=sys.stderr)
        return 2
    params = None
    if args.params:
        try:
            params = cosmic.load_params(args.params)
        except ParameterError as exc:
            print(f"urkit: error: {exc}", file=sys.stderr)
            return 2
    try:
        records = _run(args, params)
    except (ParameterError, ValueError) as exc:
        print(f"urkit: error: {exc}", file=sys.stderr)
        return 2
    except UrkitError as exc:
        print(f"urkit: verification error: {exc}", file=sys.stderr)
        return 1
    if args.format == "records":
        print(render_records([_run_record(args), *records]))
    else:
        print(render_table(records, args.seed))
    return 1 if any(r.failed for r in records) else 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
