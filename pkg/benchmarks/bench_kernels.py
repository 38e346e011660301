#!/usr/bin/env python3
"""Timing comparison between the compiled table kernels and the numpy path.

Builds a few rings of increasing order and times the four hot functions on
each backend. Run after changing anything under src/starbench/kernels:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --repeat 9 --rings "Z(30)" "M(2, Z(5))"

The two implementations must return identical witnesses; this script
asserts that on every call, so it doubles as a slow agreement check.

The associativity and distributivity scans are cubic in ring order, so
orders much past 1000 take minutes per call; that is why M(2, Z(7)) is
not in the default list.
"""

import argparse
import statistics
import sys
import time

import numpy as np

from starbench import build_ring, parse_ring_expr
from starbench.kernels import pure

try:
    from starbench.kernels import _speed as compiled
except ImportError:
    compiled = None

DEFAULT_RINGS = ["Z(30)", "M(2, Z(3))", "M(2, Z(4))", "M(2, Z(5))"]

FUNCTIONS = [
    ("assoc", lambda mod, t: mod.first_assoc_violation(t["mul"])),
    ("distrib", lambda mod, t: mod.first_distrib_violation(t["add"], t["mul"])),
    ("antimult", lambda mod, t: mod.first_antimult_violation(t["mul"], t["star"])),
    ("semi-proper", lambda mod, t: mod.semi_proper_witness(t["mul"], t["star"])),
]


def tables_of(text):
    ring = build_ring(parse_ring_expr(text))
    n = ring.order
    add = np.empty((n, n), dtype=np.int32)
    mul = np.empty((n, n), dtype=np.int32)
    star = np.empty(n, dtype=np.int32)
    for i in range(n):
        star[i] = ring.star(i)
        for j in range(n):
            add[i, j] = ring.add(i, j)
            mul[i, j] = ring.mul(i, j)
    return n, {"add": add, "mul": mul, "star": star}


def best_of(fn, repeat):
    times = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times), result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rings", nargs="*", default=DEFAULT_RINGS)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    if compiled is None:
        print("compiled extension not importable; timing the numpy path only")

    print(
        "%-12s %-12s %10s %12s %12s %9s" % ("ring", "kernel", "order", "pure", "compiled", "speedup"),
        flush=True,
    )
    for text in args.rings:
        n, tables = tables_of(text)
        repeat = args.repeat if n < 500 else max(1, args.repeat // 3)
        for name, call in FUNCTIONS:
            p_best, _, p_res = best_of(lambda: call(pure, tables), repeat)
            if compiled is None:
                print("%-12s %-12s %10d %10.3fms %12s %9s" % (text, name, n, p_best * 1e3, "-", "-"), flush=True)
                continue
            c_best, _, c_res = best_of(lambda: call(compiled, tables), repeat)
            if p_res != c_res:
                print("backend disagreement on %s/%s: pure=%r compiled=%r" % (text, name, p_res, c_res))
                return 1
            print(
                "%-12s %-12s %10d %10.3fms %10.3fms %8.1fx"
                % (text, name, n, p_best * 1e3, c_best * 1e3, p_best / c_best if c_best else float("inf")),
                flush=True,
            )
    return 0


if __name__ == "__main__":
    sys.exit(main())
