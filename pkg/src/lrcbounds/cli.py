"""Command-line interface: ``lrcbounds {bound,table,asym,figure1,verify}``.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success, 1 a check
failed or a solver/data error, 2 invalid input, 3 the bound does not apply.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Callable, List, Optional, Sequence

from . import asym, finite, tables, verify
from .classical import DataFileError
from .lpbound import DualCertificate, lp_dimension_bound, singleton_certificate
from .model import CodeParams, InapplicableBound, ParameterError, format_number
from .ratlp import LpError, dump

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INAPPLICABLE = 0, 1, 2, 3

BOUND_METHODS = ("lp", "sh", "sh-lrc", "rec-hamming", "rec-plotkin", "rec-singleton",
                 "singleton-gopalan", "singleton-rho", "lp-singleton-cert")
# methods that need n to split into groups of width r + rho - 1
GROUPED = {"lp", "lp-singleton-cert"}


class UsageError(ParameterError):
    pass


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _certificate_json(cert: DualCertificate, full: bool) -> dict:
    if cert.factors is not None:
        return {"factors": format_number(cert.factors)}
    coeffs = cert.expanded()
    out = {"nonzero": len(coeffs)}
    if full:
        out["coeffs"] = {",".join(map(str, j)): format_number(v) for j, v in sorted(coeffs.items())}
    return out


def _witness_json(witness: dict, full_certificate: bool) -> dict:
    out = {}
    for key, value in witness.items():
        if isinstance(value, DualCertificate):
            out[key] = _certificate_json(value, full_certificate)
        else:
            out[key] = format_number(value)
    return out


def _run_bound(args) -> dict:
    q, n, d, r, rho = args.q, args.n, args.d, args.r, args.rho
    if args.method in GROUPED:
        params = CodeParams.from_length(q, n, r, rho, d)
    if args.method == "lp":
        if args.dump_lp:
            from .lpbound import build_primal

            with open(args.dump_lp, "w") as fh:
                dump(build_primal(params), fh)
        mode = args.mode or "auto"
        res = lp_dimension_bound(params, mode=mode)
    elif args.method == "lp-singleton-cert":
        _, res = singleton_certificate(params)
    elif args.method in ("sh", "sh-lrc"):
        if rho != 2:
            raise ParameterError("the shortening bound is implemented for rho = 2")
        res = finite.shortening_bound(q, n, d, r, lrc_recursive=args.method == "sh-lrc")
    elif args.method.startswith("rec-"):
        res = finite.corollary2(args.method[4:], q, n, d, r, rho)
    elif args.method == "singleton-gopalan":
        res = finite.singleton_gopalan_k(n, d, r)
    else:
        res = finite.singleton_rho_k(n, d, r, rho)
    return {
        "method": res.method,
        "params": {"q": q, "n": n, "d": d, "r": r, "rho": rho},
        "value": format_number(res.value),
        "exact": res.exact,
        "witness": _witness_json(res.witness, args.certificate),
    }


def cmd_bound(args) -> int:
    print(json.dumps(_run_bound(args), sort_keys=True))
    return EXIT_OK


def cmd_table(args) -> int:
    ids = list(tables.TABLES) if args.id == "all" else [args.id]
    rows = tables.compute(ids, jobs=args.jobs)
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["table", "r", "SH", "LP", "flag"])
    for row in rows:
        out.writerow([row.table, row.r, row.sh, row.lp, row.flag])
    return EXIT_OK


def parse_grid(text: str) -> List[float]:
    """``a:b:step`` inclusive of ``b``; a bare number is a one-point grid."""
    parts = text.split(":")
    try:
        nums = [float(p) for p in parts]
    except ValueError:
        raise UsageError(f"bad delta grid {text!r}; expected a:b:step") from None
    if len(nums) == 1:
        return nums
    if len(nums) != 3 or nums[2] <= 0 or nums[1] < nums[0]:
        raise UsageError(f"bad delta grid {text!r}; expected a:b:step with a <= b, step > 0")
    a, b, step = nums
    count = int(math.floor((b - a) / step + 1e-9)) + 1
    return [round(a + i * step, 12) for i in range(count)]


def _curve(args) -> Callable[[float], asym.RateCurvePoint]:
    if args.bound == "gv-rho":
        return partial(asym.gv_rho, args.q, args.r, args.rho)
    if args.bound == "upper-disjoint":
        return partial(asym.upper_disjoint, args.r, interp=asym.DisjointInterpretation(args.interp))
    return partial(asym.CURVES[args.bound], args.r)


def _pmap(fn, items: Sequence, jobs: Optional[int]) -> list:
    if jobs == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def cmd_asym(args) -> int:
    grid = parse_grid(args.delta_grid)
    for delta in grid:
        if not 0 <= delta <= 0.5:
            raise UsageError(f"delta={delta} outside [0, 1/2]")
    points = _pmap(_curve(args), grid, args.jobs)
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["delta", "value", "method", "minimizer", "note"])
    for p in points:
        minimizer = ";".join(f"{k}={_fmt(v)}" for k, v in p.minimizer.items())
        out.writerow([_fmt(p.delta), _fmt(p.value), p.method, minimizer,
                      "" if p.physical else "non-physical"])
    return EXIT_OK


def _figure_row(item):
    r, delta = item
    cm = asym.upper_cm(r, delta).value
    dis = asym.upper_disjoint(r, delta).value
    return r, delta, cm, dis, cm - dis


def cmd_figure1(args) -> int:
    try:
        rs = [int(x) for x in args.r.split(",")]
    except ValueError:
        raise UsageError(f"--r must be a comma-separated list of integers, got {args.r!r}") from None
    grid = parse_grid(args.delta_grid)
    rows = _pmap(_figure_row, [(r, d) for r in rs for d in grid], args.jobs)
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["r", "delta", "upper_cm", "upper_disjoint", "difference"])
    for r, delta, cm, dis, diff in rows:
        out.writerow([r, _fmt(delta), _fmt(cm), _fmt(dis), _fmt(diff)])
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        rep = verify.run(name)
        print(f"{name}: {'pass' if rep.ok else 'FAIL'} ({rep.checks} checks, "
              f"{len(rep.failures)} failures)")
        for failure in rep.failures:
            print(f"  {name}: {failure}", file=sys.stderr)
        ok &= rep.ok
    return EXIT_OK if ok else EXIT_FAIL


def _jobs(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("--jobs must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lrcbounds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", help="one finite-length dimension bound as JSON")
    b.add_argument("--method", required=True, choices=BOUND_METHODS)
    for flag in ("--n", "--d", "--r"):
        b.add_argument(flag, type=int, required=True)
    b.add_argument("--q", type=int, default=2)
    b.add_argument("--rho", type=int, default=2)
    b.add_argument("--mode", choices=("exact", "float", "auto"),
                   help="LP arithmetic (default auto: exact for small LPs)")
    b.add_argument("--dump-lp", metavar="PATH", help="write the LP in text form (lp only)")
    b.add_argument("--certificate", action="store_true",
                   help="include every dual certificate coefficient in the witness")
    b.set_defaults(func=cmd_bound)

    t = sub.add_parser("table", help="shortening vs. LP bound table as CSV")
    t.add_argument("id", choices=list(tables.TABLES) + ["all"])
    t.add_argument("--jobs", type=_jobs, default=None)
    t.set_defaults(func=cmd_table)

    a = sub.add_parser("asym", help="asymptotic rate bound over a delta grid as CSV")
    a.add_argument("--bound", required=True,
                   choices=("gv", "gv-rho", "mrrw2", "upper-cm", "upper-linear", "upper-disjoint"))
    a.add_argument("--r", type=int, required=True)
    a.add_argument("--delta-grid", required=True, metavar="A:B:STEP")
    a.add_argument("--interp", choices=[i.value for i in asym.DisjointInterpretation],
                   default=asym.DisjointInterpretation.CONSISTENT.value)
    a.add_argument("--q", type=int, default=2, help="alphabet size (gv-rho)")
    a.add_argument("--rho", type=int, default=2, help="local distance (gv-rho)")
    a.add_argument("--jobs", type=_jobs, default=None)
    a.set_defaults(func=cmd_asym)

    f = sub.add_parser("figure1", help="upper_cm - upper_disjoint per r and delta as CSV")
    f.add_argument("--r", default="2,3,4,5", help="comma-separated localities")
    f.add_argument("--delta-grid", default="0.01:0.49:0.01", metavar="A:B:STEP")
    f.add_argument("--jobs", type=_jobs, default=None)
    f.set_defaults(func=cmd_figure1)

    v = sub.add_parser("verify", help="run a self-check suite")
    v.add_argument("suite", choices=list(verify.SUITES) + ["all"])
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InapplicableBound as exc:
        print(f"lrcbounds: not applicable: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    except (ParameterError, ValueError) as exc:
        print(f"lrcbounds: invalid input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (LpError, DataFileError) as exc:
        print(f"lrcbounds: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
