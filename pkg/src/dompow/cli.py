"""Command line: ``compute``, ``verify`` and ``scan``.

Exit codes: 0 success, 1 a checked property failed, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .dompoly import Family, GraphSpec, cycle_poly, path_poly_A, path_poly_B, path_poly_via_relaxed
from .oracle import MAX_VERTICES, brute_domination_poly, build_power_graph
from .scan import scan, write_scan
from .suites import SUITES

DEFAULT_BOUND = 150
PAPER_BOUND = 500


class UsageError(Exception):
    pass


def compute(family: str, n: int, ell: int, method: str = "A") -> dict:
    fam = Family(family)
    if n < 0 or ell < 1:
        raise UsageError("need n >= 0 and ell >= 1")
    if method == "A":
        poly = path_poly_A(n, ell) if fam is Family.PATH else cycle_poly(n, ell)
    elif method == "B":
        if fam is not Family.PATH:
            raise UsageError("method B applies to path powers only")
        poly = path_poly_B(n, ell)
    elif method == "relaxed":
        if fam is not Family.PATH:
            raise UsageError("method relaxed applies to path powers only")
        if n < ell + 1:
            raise UsageError("method relaxed needs n >= ell + 1")
        poly = path_poly_via_relaxed(n, ell)
    elif method == "oracle":
        if n > MAX_VERTICES:
            raise UsageError(f"method oracle needs n <= {MAX_VERTICES}")
        poly = brute_domination_poly(build_power_graph(GraphSpec(fam, n, ell)))
    else:
        raise UsageError(f"unknown method {method!r}")
    return {
        "family": fam.value,
        "n": n,
        "ell": ell,
        "method": method,
        "coefficients": [str(c) for c in poly.coeffs],
    }


def _cmd_compute(args) -> int:
    doc = compute(args.family, args.n, args.ell, args.method)
    print(json.dumps(doc))
    return 0


def _cmd_verify(args) -> int:
    kwargs = {}
    if args.suite == "routes":
        kwargs = dict(n_max=args.n_max or 300, ell_max=args.ell_max or 20)
    elif args.suite == "oracle":
        kwargs = dict(n_max=args.n_max or 18, ell_max=args.ell_max)
    elif args.suite == "identities":
        kwargs = dict(ell_max=args.ell_max or 30, n_max=args.n_max)
    elif args.suite == "theorem6":
        kwargs = dict(ell_max=args.ell_max or 8, n_max=args.n_max or 300)
    if args.n_max is not None and args.n_max < 1 or args.ell_max is not None and args.ell_max < 1:
        raise UsageError("bounds must be >= 1")
    t0 = time.perf_counter()
    res = SUITES[args.suite](**kwargs)
    print(res.report())
    print(f"elapsed {time.perf_counter() - t0:.1f}s")
    return 0 if res.ok else 1


def _cmd_scan(args) -> int:
    n_max = PAPER_BOUND if args.paper_bound else args.n_max
    ell_max = PAPER_BOUND if args.paper_bound else args.ell_max
    if n_max < 1 or ell_max < 1:
        raise UsageError("--n-max and --ell-max must be >= 1")
    families = list(Family) if args.family == "both" else [args.family]
    rows = scan(families, n_max, ell_max, jobs=args.jobs)
    try:
        if args.out in (None, "-"):
            summary = write_scan(rows, sys.stdout, args.format)
            log = sys.stderr
        else:
            with open(args.out, "w", newline="\n") as fh:
                summary = write_scan(rows, fh, args.format)
            log = sys.stdout
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"rows={summary['rows']} violations={summary['violations']} "
          f"mode_off_half={summary['mode_off_half']}", file=log)
    return 1 if summary["violations"] else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dompow", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print one domination polynomial as JSON")
    p.add_argument("--family", choices=[f.value for f in Family], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--method", choices=["A", "B", "relaxed", "oracle"], default="A")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--n-max", type=int)
    p.add_argument("--ell-max", type=int)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("scan", help="tabulate sequence properties over an (n, ell) grid")
    p.add_argument("--family", choices=[f.value for f in Family] + ["both"], required=True)
    p.add_argument("--n-max", type=int, default=DEFAULT_BOUND)
    p.add_argument("--ell-max", type=int, default=DEFAULT_BOUND)
    p.add_argument("--paper-bound", action="store_true",
                   help=f"scan n, ell <= {PAPER_BOUND} (slow)")
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
