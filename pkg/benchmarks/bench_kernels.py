#!/usr/bin/env python3
"""Benchmark the compiled entailment kernels against the pure-Python twins.

Workloads mirror the hot paths: all-pairs entailment matrices (quotient
construction and embedding certificates) and single entailment calls over a
very long context (the merging-law check at sigma_size 4 runs one with 65536
positions).

Run:  python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time
from array import array

from triposlab import _speedups_py

try:
    from triposlab import _speedups
except ImportError:
    _speedups = None


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def random_tables(rng, n):
    imp = array("i", (rng.randrange(n) for _ in range(n * n)))
    meet = array("i", (rng.randrange(n) for _ in range(1 << n)))
    filt = rng.randrange(1 << n)
    return imp, meet, filt


def bench_matrix(impl, rng, n, ncodes, k):
    imp, meet, filt = random_tables(rng, n)
    codes = array("i", (rng.randrange(n) for _ in range(ncodes * k)))
    return lambda: impl.entail_matrix(n, imp, meet, filt, codes, ncodes, k)


def bench_long_entails(impl, rng, n, ctx):
    imp, meet, filt = random_tables(rng, n)
    a = array("i", (rng.randrange(n) for _ in range(ctx)))
    b = array("i", (rng.randrange(n) for _ in range(ctx)))
    return lambda: impl.entails(n, imp, meet, filt, a, b)


def bench_matrix_masks(impl, rng, n, ncodes, k):
    size = 1 << n
    ftab = array("i", (rng.randrange(size) for _ in range(size * size)))
    meet = array("i", (rng.randrange(n) for _ in range(size)))
    filt = rng.randrange(1 << n)
    codes = array("i", (rng.randrange(size) for _ in range(ncodes * k)))
    return lambda: impl.entail_matrix_masks(size, ftab, meet, filt,
                                            codes, ncodes, k)


WORKLOADS = [
    ("entail_matrix 256x256 ctx=2 (quotient at sigma=16)",
     lambda impl, rng: bench_matrix(impl, rng, 16, 256, 2)),
    ("entail_matrix 64x64 ctx=3 (sigma=4 one past budget)",
     lambda impl, rng: bench_matrix(impl, rng, 4, 64, 3)),
    ("entails ctx=65536 (merging law at sigma=4)",
     lambda impl, rng: bench_long_entails(impl, rng, 4, 65536)),
    ("entail_matrix_masks 256x256 ctx=2 (embedding at sigma=4)",
     lambda impl, rng: bench_matrix_masks(impl, rng, 4, 256, 2)),
]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    impls = [("pure", _speedups_py)]
    if _speedups is not None:
        impls.append(("compiled", _speedups))
    else:
        print("compiled kernels unavailable; timing pure only")

    print(f"{'workload':<58}" + "".join(f"{name:>12}" for name, _ in impls)
          + ("     speedup" if len(impls) == 2 else ""))
    for label, make in WORKLOADS:
        times = []
        for _, impl in impls:
            fn = make(impl, random.Random(0))
            times.append(timeit(fn, args.repeat))
        row = f"{label:<58}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
