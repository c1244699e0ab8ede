"""Compare the compiled kernel backend against the pure-Python fallback.

Runs the three hot kernels on identical random inputs and reports wall
time per call for each backend.  Entries stay small Python ints, so the
compiled variant mostly saves interpreter overhead on the index loops;
expect modest ratios, not order-of-magnitude wins.

Usage: python benchmarks/bench_kernels.py [--size N] [--repeat K]
"""

import argparse
import random
import time

from jacdec import _kernels_py

try:
    from jacdec import _kernels_c
except ImportError:
    _kernels_c = None


def random_matrix(rng, rows, cols, bound=9):
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def time_call(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=24, help="matrix dimension")
    parser.add_argument("--repeat", type=int, default=5, help="timed runs per case")
    parser.add_argument("--seed", type=int, default=20240)
    args = parser.parse_args()

    if _kernels_c is None:
        print("compiled backend not built; run pip install -e . first")
        return 1

    rng = random.Random(args.seed)
    n = args.size
    A = random_matrix(rng, n, n)
    B = random_matrix(rng, n, n)
    cases = [
        ("int_matmul", (A, B)),
        ("hnf_transform", (A,)),
        ("snf_transform", (A,)),
    ]

    print(f"size {n}x{n}, best of {args.repeat} runs")
    print(f"{'kernel':<14} {'python':>10} {'compiled':>10} {'ratio':>7}")
    for name, call_args in cases:
        py = time_call(getattr(_kernels_py, name), call_args, args.repeat)
        cy = time_call(getattr(_kernels_c, name), call_args, args.repeat)
        ratio = py / cy if cy > 0 else float("inf")
        print(f"{name:<14} {py * 1e3:>8.2f}ms {cy * 1e3:>8.2f}ms {ratio:>6.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
