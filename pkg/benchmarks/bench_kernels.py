#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Runs the three hot workloads on both backends and prints a timing table:
  - batched 4x4 determinants over GF(16)
  - full deep-hole class enumeration at q=16, k=12 (subset scan)
  - coset oracle at q=8, k=4 (codeword enumeration + batched Hamming minima)

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from trslab import codes, deepholes as dh, kernels
from trslab.field import make_field


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_det_batch(repeat):
    ctx = make_field(2, 4)
    tables = ctx.tables()
    rng = np.random.default_rng(0)
    mats = rng.integers(0, 16, size=(200000, 4, 4))
    return _time(lambda: kernels.det_batch(tables, mats), repeat)


def bench_prop8(repeat):
    ctx = make_field(2, 4)

    def run():
        dh._scanner_cache.clear()
        code = codes.full_field_code(ctx, 12, 7)
        return len(dh.enumerate_deep_holes(code))

    return _time(run, repeat)


def bench_coset(repeat):
    ctx = make_field(2, 3)
    code = codes.full_field_code(ctx, 4, 1)
    reps = codes.syndrome_class_reps(ctx, code.r)
    words = codes.coset_representatives(code, reps)

    def run():
        code._codewords = None
        return int(codes.error_distances(code, words).max())

    return _time(run, repeat)


BENCHES = [
    ("det_batch 200k 4x4 GF(16)", bench_det_batch),
    ("deep-hole enum q=16 k=12", bench_prop8),
    ("coset oracle q=8 k=4", bench_coset),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if not kernels.HAVE_NUMBA:
        print("numba not importable; only the numpy path will run")

    print(f"{'workload':30s} {'numba':>10s} {'numpy':>10s} {'speedup':>9s}")
    for name, bench in BENCHES:
        times = {}
        for backend in ("numba", "numpy"):
            if backend == "numba" and not kernels.HAVE_NUMBA:
                times[backend] = float("nan")
                continue
            kernels.set_backend(backend)
            bench(1)  # warm the JIT / caches outside the timed region
            times[backend], _ = bench(args.repeat)
        kernels.set_backend(None)
        speedup = times["numpy"] / times["numba"] if times["numba"] else float("inf")
        print(
            f"{name:30s} {times['numba'] * 1e3:9.1f}ms {times['numpy'] * 1e3:9.1f}ms {speedup:8.1f}x"
        )


if __name__ == "__main__":
    main()
