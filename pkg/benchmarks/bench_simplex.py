"""Time the compiled and pure-Python float simplex kernels on Delsarte LPs.

    python3 benchmarks/bench_simplex.py [--repeat 3] [--r 4 7 10]

Prints one CSV row per instance and kernel with the best wall time.
"""

import argparse
import csv
import sys
import time

from lrcbounds import ratlp
from lrcbounds.lpbound import build_primal
from lrcbounds.model import CodeParams


def best_time(problem, kernel, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        sol = ratlp.solve(problem, mode="float", kernel=kernel)
        best = min(best, time.perf_counter() - start)
    return best, sol


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--r", type=int, nargs="+", default=[4, 7, 10])
    parser.add_argument("--s", type=int, nargs="+", default=[2, 3])
    args = parser.parse_args(argv)
    if ratlp.KERNEL != "cython":
        print("compiled kernel not built; run `pip install --no-build-isolation -e .`",
              file=sys.stderr)
        return 1
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["s", "r", "d", "rows", "vars", "kernel", "seconds", "objective", "speedup"])
    for s in args.s:
        for r in args.r:
            for d in (3, 5):
                problem = build_primal(CodeParams(2, s, r, 2, d), symmetric=s > 2)
                t_py, sol_py = best_time(problem, "python", args.repeat)
                t_cy, sol_cy = best_time(problem, "cython", args.repeat)
                for name, t, sol in (("python", t_py, sol_py), ("cython", t_cy, sol_cy)):
                    out.writerow([s, r, d, problem.nrows, problem.nvars, name, f"{t:.4f}",
                                  f"{sol.objective:.6f}", f"{t_py / t:.2f}"])
    return 0


if __name__ == "__main__":
    sys.exit(main())
