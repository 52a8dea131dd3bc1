"""Command-line interface.

Commands:
  check-order  compare two systems under one of the four orders
  redundancy   system-level vs component-level spares for one system
  residual     used system vs system of used components
  distortion   emit the distortion curve (p, h, h', H, R) as CSV
  reproduce    run a named reference case from the registry

Exit codes: 0 = analysis completed (whatever the verdict), 1 = input or
parse error (diagnostic on stderr names the JSON path), 2 = unknown command
or case id. Reports are deterministic JSON; timing goes to stderr only so
identical inputs yield byte-identical files.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

import numpy as np

from ._util import DEFAULT_EPS, DEFAULT_GRID, DEFAULT_TOL
from .distortion import eval_functionals
from .errors import RelageError, SpecError
from .lifetimes import system_lifetime
from .orders import (
    check_order,
    compare_systems_exact,
    redundancy_verdict,
    residual_verdict,
)
from .reproduce import CASES, UnknownCase, reproduce
from .specio import dump_report, load_system_file

_ORDER_MAP = {"hr": "hr", "rhr": "rhr", "afc": "afc", "afb": "afb"}


def _digest(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()[:16]


def _base_report(args, command: str) -> dict:
    return {
        "command": command,
        "config": {
            "grid": args.grid,
            "eps": args.eps,
            "tol": args.tol,
            "seed": args.seed,
        },
    }


def _emit(report: dict, args) -> None:
    text = dump_report(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_check_order(args) -> int:
    spec_a = load_system_file(args.system_a)
    spec_b = load_system_file(args.system_b)
    report = _base_report(args, "check-order")
    report["inputs"] = {
        "system_a": _digest(args.system_a),
        "system_b": _digest(args.system_b),
    }
    report["order"] = args.order
    d1 = spec_a.distortion()
    d2 = spec_b.distortion()
    if args.exact:
        if args.order not in ("afc", "afb"):
            raise SpecError("order", "--exact applies to the ageing orders afc/afb")
        mode = "c" if args.order == "afc" else "b"
        rep = compare_systems_exact(
            d1, d2, mode, eps=args.eps, grid_points=args.grid, tol=args.tol
        )
        report["verdict"] = rep.as_dict()
    else:
        a = system_lifetime(d1, spec_a.require_marginal())
        b = system_lifetime(d2, spec_b.require_marginal())
        ov = check_order(a, b, args.order, grid_points=args.grid, tol=args.tol)
        report["verdict"] = ov.as_dict()
    _emit(report, args)
    return 0


def _cmd_redundancy(args) -> int:
    spec = load_system_file(args.system)
    report = _base_report(args, "redundancy")
    report["inputs"] = {"system": _digest(args.system)}
    rep = redundancy_verdict(
        spec.distortion(), args.m, args.mode, args.method,
        eps=args.eps, grid_points=args.grid, tol=args.tol,
    )
    report["verdict"] = rep.as_dict()
    _emit(report, args)
    return 0


def _cmd_residual(args) -> int:
    spec = load_system_file(args.system)
    report = _base_report(args, "residual")
    report["inputs"] = {"system": _digest(args.system)}
    t_samples = (0.25, 1.0, 2.5) if args.t is None else (args.t,)
    rep = residual_verdict(
        spec.distortion(), args.mode, args.method,
        eps=args.eps, grid_points=args.grid, tol=args.tol, t_samples=t_samples,
    )
    report["verdict"] = rep.as_dict()
    _emit(report, args)
    return 0


def _cmd_distortion(args) -> int:
    spec = load_system_file(args.system)
    d = spec.distortion()
    ps = np.linspace(args.eps, 1.0 - args.eps, args.grid)
    fv = eval_functionals(d, ps, eps=args.eps)
    with open(args.emit_csv, "w", encoding="utf-8") as fh:
        fh.write("p,h,h_prime,H,R\n")
        for i in range(ps.size):
            fh.write(
                f"{ps[i]!r},{fv.h[i]!r},{fv.h_prime[i]!r},{fv.H[i]!r},{fv.R[i]!r}\n"
            )
    report = _base_report(args, "distortion")
    report["inputs"] = {"system": _digest(args.system)}
    report["distortion"] = {"label": d.label, "backing": d.backing_kind}
    report["csv"] = args.emit_csv
    _emit(report, args)
    return 0


def _cmd_reproduce(args) -> int:
    cfg = {"grid": args.grid, "eps": args.eps, "tol": args.tol}
    try:
        rep = reproduce(args.case_id, cfg)
    except UnknownCase as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = _base_report(args, "reproduce")
    report["report"] = rep
    _emit(report, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relage",
        description="Relative-ageing comparisons of coherent systems with "
        "dependent identically distributed components.",
    )
    parser.add_argument("--grid", type=int, default=DEFAULT_GRID,
                        help="grid points for monotonicity checks")
    parser.add_argument("--eps", type=float, default=DEFAULT_EPS,
                        help="margin clipping the open unit interval")
    parser.add_argument("--tol", type=float, default=DEFAULT_TOL,
                        help="relative tolerance for tie detection")
    parser.add_argument("--seed", type=int, default=0, help="sampling seed")
    parser.add_argument("--out", type=str, default=None,
                        help="write the JSON report here instead of stdout")
    sub = parser.add_subparsers(dest="cmd")

    p = sub.add_parser("check-order", help="compare two systems under an order")
    p.add_argument("--system-a", required=True)
    p.add_argument("--system-b", required=True)
    p.add_argument("--order", required=True, choices=sorted(_ORDER_MAP))
    p.add_argument("--exact", action="store_true",
                   help="marginal-free verdict from the distortions alone")
    p.set_defaults(fn=_cmd_check_order)

    p = sub.add_parser("redundancy", help="system-level vs component-level spares")
    p.add_argument("--system", required=True)
    p.add_argument("--m", type=int, required=True, help="spares per unit")
    p.add_argument("--mode", required=True, choices=["c", "b"])
    p.add_argument("--method", default="iff", choices=["iff", "sufficient"])
    p.set_defaults(fn=_cmd_redundancy)

    p = sub.add_parser("residual", help="used system vs system of used components")
    p.add_argument("--system", required=True)
    p.add_argument("--mode", required=True, choices=["c", "b"])
    p.add_argument("--method", default="iff", choices=["iff", "sufficient"])
    p.add_argument("--t", type=float, default=None,
                   help="cross-validate at this age instead of the default ages")
    p.set_defaults(fn=_cmd_residual)

    p = sub.add_parser("distortion", help="emit the distortion curve as CSV")
    p.add_argument("--system", required=True)
    p.add_argument("--emit-csv", required=True)
    p.set_defaults(fn=_cmd_distortion)

    p = sub.add_parser("reproduce", help="run a named reference case")
    p.add_argument("case_id", metavar="CASE_ID",
                   help=f"one of: {', '.join(sorted(CASES))}")
    p.set_defaults(fn=_cmd_reproduce)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "fn", None):
        parser.print_help(sys.stderr)
        return 2
    started = time.perf_counter()
    try:
        status = args.fn(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except RelageError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    elapsed = (time.perf_counter() - started) * 1000.0
    print(f"completed in {elapsed:.1f} ms", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
