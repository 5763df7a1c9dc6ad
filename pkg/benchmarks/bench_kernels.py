#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the three hot paths on synthetic exponent matrices: divisibility
minimalization, batch membership, and the intersection candidate
pipeline (pairwise lcm + dedupe + minimalize).

Usage:
    python benchmarks/bench_kernels.py [--rows N] [--cols N] [--queries N] [--repeats N]
"""
import argparse
import time

import numpy as np

from idealsat import MonomialIdeal, backend
from idealsat import _kernels_numpy

try:
    from idealsat import _kernels_numba
    HAS_NUMBA = True
except ImportError:
    _kernels_numba = None
    HAS_NUMBA = False


def prepared_matrix(rng, rows, cols, top):
    mat = rng.integers(0, top, size=(rows, cols)).astype(np.int64)
    mat = np.unique(mat, axis=0)
    order = np.argsort(mat.sum(axis=1), kind="stable")
    return np.ascontiguousarray(mat[order])


def bench(fn, repeats):
    fn()  # warmup (hits the jit compile for the numba path)
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def workloads(args):
    rng = np.random.default_rng(42)
    mat = prepared_matrix(rng, args.rows, args.cols, 6)
    gens = prepared_matrix(rng, 400, args.cols, 4)
    queries = rng.integers(0, 8, size=(args.queries, args.cols)).astype(np.int64)
    # equigenerated ideals keep every generator, like the polymatroid powers
    # that dominate real runs
    left = MonomialIdeal(args.cols, rng.multinomial(10, [1 / args.cols] * args.cols, size=700))
    right = MonomialIdeal(args.cols, rng.multinomial(10, [1 / args.cols] * args.cols, size=700))

    def make(kernels):
        def ideal_intersection():
            # full production path (pairwise lcm, dedupe, canonical minimalize)
            backend.set_backend(kernels.NAME)
            try:
                return left.intersect(right)
            finally:
                backend.set_backend("auto" if HAS_NUMBA else "numpy")

        return {
            f"minimal_rows ({mat.shape[0]}x{args.cols})":
                lambda: kernels.minimal_rows_mask(mat),
            f"membership ({args.queries} queries x {gens.shape[0]} gens)":
                lambda: kernels.membership_mask(gens, queries),
            f"ideal intersection ({left.num_gens}x{right.num_gens} gens)":
                ideal_intersection,
        }

    return make


def main():
    parser = argparse.ArgumentParser(description="numba vs numpy kernel benchmark")
    parser.add_argument("--rows", type=int, default=20_000)
    parser.add_argument("--cols", type=int, default=6)
    parser.add_argument("--queries", type=int, default=100_000)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    make = workloads(args)
    numpy_times = {name: bench(fn, args.repeats) for name, fn in make(_kernels_numpy).items()}
    if HAS_NUMBA:
        numba_times = {name: bench(fn, args.repeats) for name, fn in make(_kernels_numba).items()}
    else:
        print("numba not available, timing the numpy fallback only\n")
        numba_times = {}

    width = max(len(name) for name in numpy_times)
    header = f"{'workload':<{width}}  {'numpy (s)':>10}  {'numba (s)':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, t_np in numpy_times.items():
        if name in numba_times:
            t_nb = numba_times[name]
            print(f"{name:<{width}}  {t_np:>10.4f}  {t_nb:>10.4f}  {t_np / t_nb:>7.1f}x")
        else:
            print(f"{name:<{width}}  {t_np:>10.4f}  {'-':>10}  {'-':>8}")


if __name__ == "__main__":
    main()
