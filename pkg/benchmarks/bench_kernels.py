#!/usr/bin/env python3
"""Benchmark the jitted power-sum kernel against the pure-numpy fallback.

Usage: python benchmarks/bench_kernels.py [--primes 9973 20011 49999]

The figure that matters for survey planning is pairs/s, where one pair is a
(residue, index) step of the inner loop: a survey to x costs roughly
sum over primes p <= x of p^2/4 pairs.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

import genocchi.kernels as kernels
from genocchi.modarith import primitive_root


def time_fn(fn, p, coeffs, min_seconds=0.4):
    fn(p, coeffs)  # warm-up (JIT compile, cache touch)
    reps = 0
    start = time.perf_counter()
    while True:
        out = fn(p, coeffs)
        reps += 1
        elapsed = time.perf_counter() - start
        if elapsed >= min_seconds:
            return out, elapsed / reps


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--primes", type=int, nargs="+", default=[9973, 20011, 49999])
    args = parser.parse_args()

    print(f"default backend: {kernels.active_backend()}")
    header = f"{'p':>8} {'pairs':>12} {'numba s':>10} {'numpy s':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for p in args.primes:
        g = primitive_root(p)
        coeffs = kernels.half_coefficients(p, g)
        pairs = (p // 2) * ((p - 3) // 2)
        if kernels.active_backend() == "numba":
            jit_out, jit_t = time_fn(kernels.power_sums, p, coeffs)
        else:
            jit_out, jit_t = None, float("nan")
        np_out, np_t = time_fn(kernels.power_sums_numpy, p, coeffs)
        if jit_out is not None:
            assert np.array_equal(jit_out, np_out), f"backend mismatch at p={p}"
        speed = np_t / jit_t if jit_t == jit_t else float("nan")
        print(f"{p:>8} {pairs:>12} {jit_t:>10.4f} {np_t:>10.4f} {speed:>8.1f}x")
        print(
            f"{'':>8} numba {pairs / jit_t / 1e9:6.2f} G pairs/s | "
            f"numpy {pairs / np_t / 1e9:6.2f} G pairs/s"
        )


if __name__ == "__main__":
    main()
