"""Compiled versus pure-Python max-plus minor tables.

Run with ``python3 benchmarks/bench_kernels.py [--repeat N]``.  For each size
the full insertion table of a random integer matrix is built through both
evaluators; the results are checked for equality before timings are shown.
"""

import argparse
import random
import timeit

from troprsk.algebra import MAXPLUS, TransportMatrix
from troprsk.lattice_paths import Orientation, kernel_available, rect_minor_table
import troprsk.lattice_paths as lp

SIZES = [(3, 4), (4, 6), (5, 8), (6, 10)]


def table(X, use_kernel):
    saved = lp.kernel_available
    lp.kernel_available = lambda: use_kernel
    try:
        return rect_minor_table(X, Orientation.INSERTION)
    finally:
        lp.kernel_available = saved


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    if not kernel_available():
        print("compiled kernel not available; only the pure-Python path can run")
        return
    rng = random.Random(args.seed)
    print(f"{'size':>8} {'python [s]':>12} {'kernel [s]':>12} {'speedup':>8}")
    for m, n in SIZES:
        X = TransportMatrix(MAXPLUS, [[rng.randint(0, 9) for _ in range(n)] for _ in range(m)])
        assert table(X, True).entries == table(X, False).entries
        py = min(timeit.repeat(lambda: table(X, False), number=1, repeat=args.repeat))
        cy = min(timeit.repeat(lambda: table(X, True), number=1, repeat=args.repeat))
        print(f"{m}x{n:<6} {py:12.4f} {cy:12.4f} {py / cy:8.1f}")


if __name__ == "__main__":
    main()
