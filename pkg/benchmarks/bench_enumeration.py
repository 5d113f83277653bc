"""Compare the compiled and pure-Python complete-labelling kernels.

Usage: python benchmarks/bench_enumeration.py [--sizes 8 12 16] [--count 20] [--repeat 3]

Frameworks are drawn with a fixed seed so runs are comparable.  Each row
reports the best total time over ``--repeat`` runs for the whole batch.
"""

import argparse
import random
import sys
import timeit

from argnlg import kernel
from argnlg.framework import ArgumentationFramework
from argnlg.semantics import complete_labellings


def random_framework(rng: random.Random, n: int, density: float) -> ArgumentationFramework:
    args = tuple(f"a{i}" for i in range(n))
    attacks = frozenset((x, y) for x in args for y in args if rng.random() < density)
    return ArgumentationFramework(args, attacks)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[8, 12, 16, 20])
    parser.add_argument("--count", type=int, default=20, help="frameworks per size")
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--density", type=float, default=0.15)
    parser.add_argument("--seed", type=int, default=0)
    ns = parser.parse_args(argv)

    backends = ["python"] + (["cython"] if kernel.BACKEND == "cython" else [])
    if len(backends) == 1:
        print("compiled kernel unavailable; timing the Python fallback only", file=sys.stderr)
    print(f"{'n':>4} {'backend':>8} {'seconds':>10} {'speedup':>8}")
    for n in ns.sizes:
        rng = random.Random(ns.seed + n)
        batch = [random_framework(rng, n, ns.density) for _ in range(ns.count)]
        timings = {}
        for backend in backends:
            def run():
                for af in batch:
                    complete_labellings(af, backend=backend)
            timings[backend] = min(timeit.repeat(run, number=1, repeat=ns.repeat))
        for backend in backends:
            speedup = timings["python"] / timings[backend] if timings[backend] else float("inf")
            print(f"{n:>4} {backend:>8} {timings[backend]:>10.4f} {speedup:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
