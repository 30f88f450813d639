"""Command-line entry point: verify / describe / replay.

Exit codes: 0 all suites passed, 1 at least one residual failure,
2 configuration or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .liealg import InputError
from .suites import RunConfig, describe, replay_report, report_json, run


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--algebra", default="su2",
                        help="bundled name (su2, so3, sl2) or JSON file path")
    parser.add_argument("--k", type=float, default=1.0, help="extension level")
    parser.add_argument("--degree", type=int, default=4,
                        help="base polynomial degree of sampled paths")
    parser.add_argument("--splitting", default="linear",
                        help="'linear' or comma-separated u-coefficients")
    parser.add_argument("--nt", type=int, default=256, help="grid intervals in t")
    parser.add_argument("--ntheta", type=int, default=256,
                        help="grid intervals in theta")
    parser.add_argument("--seed", type=int, default=20240601)
    parser.add_argument("--trials", type=int, default=50)
    parser.add_argument("--tol-exact", type=float, default=1e-10,
                        help="tolerance for exact-arithmetic identities")
    parser.add_argument("--tol-quad", type=float, default=1e-3,
                        help="tolerance for quadrature-based identities")
    parser.add_argument("--suite", action="append", default=None,
                        help="suite name (repeatable); default all")
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--form-scale", type=float, default=1.0,
                        help="scalar rescaling of the invariant form")
    parser.add_argument("--report", type=Path, default=None,
                        help="write the JSON report here")


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        algebra=args.algebra,
        k=args.k,
        degree=args.degree,
        splitting=args.splitting,
        nt=args.nt,
        ntheta=args.ntheta,
        seed=args.seed,
        trials=args.trials,
        tol_exact=args.tol_exact,
        tol_quad=args.tol_quad,
        suites=tuple(args.suite) if args.suite else ("all",),
        jobs=args.jobs,
        form_scale=args.form_scale,
    )


def _print_table(report: dict) -> None:
    width = max(len(s["name"]) for s in report["suites"])
    print(f"{'suite':<{width}}  {'residual':>12}  {'tolerance':>10}  status")
    for s in report["suites"]:
        status = "PASS" if s["passed"] else "FAIL"
        print(f"{s['name']:<{width}}  {s['max_residual']:>12.3e}"
              f"  {s['tolerance']:>10.1e}  {status}")
    summary = report["summary"]
    print(f"{summary['passed']}/{summary['total']} suites passed "
          f"in {summary['wall_time_s']:.2f}s")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="lie2",
        description="certify the algebraic identities of the path/loop "
                    "models of categorified Lie algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run verification suites")
    _add_config_flags(p_verify)

    p_describe = sub.add_parser("describe", help="print what a suite checks")
    p_describe.add_argument("suite_name", metavar="SUITE")

    p_replay = sub.add_parser("replay", help="re-evaluate witnesses from a report")
    p_replay.add_argument("--report", type=Path, required=True)

    args = parser.parse_args(argv)

    try:
        if args.command == "describe":
            print(describe(args.suite_name))
            return 0
        if args.command == "replay":
            rows = replay_report(args.report)
            if not rows:
                print("report contains no witnesses to replay")
                return 0
            for name, residual in rows:
                print(f"{name}: replayed residual {residual:.6e}")
            return 0
        # verify
        config = _config_from_args(args)
        config.validate()
        if float(config.k) != int(config.k):
            print(f"warning: level k = {config.k:g} is not an integer; "
                  "group-level extensions require integral levels",
                  file=sys.stderr)
        report = run(config)
        _print_table(report)
        if args.report is not None:
            args.report.write_text(report_json(report), encoding="utf-8")
            print(f"report written to {args.report}")
        return 0 if report["summary"]["all_passed"] else 1
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
