#!/usr/bin/env python3
"""Benchmark the numba match kernel against the pure-numpy fallback.

Builds synthetic int8 columns of the requested size, runs a representative
set of selector vectors through both kernels (after a numba warmup pass)
and prints per-query timings plus the speedup. Correctness is asserted on
every query: both kernels must produce identical masks.

Usage: python3 benchmarks/bench_filter_kernel.py [--rows 2000000] [--repeats 5]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from tweetfilter.kernel import match_mask_numba, match_mask_numpy

SELECTORS = {
    "default (all no)": [0, 0, 0, 0, -1, -1],
    "hate only": [1, -1, -1, -1, -1, -1],
    "misinfo + es": [-1, 1, -1, -1, -1, 1],
    "wide open": [-1, -1, -1, -1, -1, -1],
    "all six active": [0, 0, 1, 0, 2, 0],
}


def build_columns(rows: int, seed: int = 7):
    rng = np.random.default_rng(seed)
    return (
        rng.integers(0, 3, rows, dtype=np.int8),  # category
        rng.integers(0, 2, rows, dtype=np.int8),  # is_bot
        rng.integers(0, 2, rows, dtype=np.int8),  # verified
        rng.integers(0, 3, rows, dtype=np.int8),  # sentiment
        rng.integers(0, 3, rows, dtype=np.int8),  # language
    )


def time_kernel(kernel, columns, selector, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        started = time.perf_counter()
        kernel(*columns, selector)
        best = min(best, time.perf_counter() - started)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--rows", type=int, default=2_000_000)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    columns = build_columns(args.rows)
    warmup = np.array(SELECTORS["default (all no)"], dtype=np.int8)
    match_mask_numba(*columns, warmup)  # JIT compile outside the timed region

    print(f"rows={args.rows:,} repeats={args.repeats} (best-of timings)")
    print(f"{'query':<22} {'numpy':>12} {'numba':>12} {'speedup':>9}")
    for name, raw_selector in SELECTORS.items():
        selector = np.array(raw_selector, dtype=np.int8)
        numpy_mask = match_mask_numpy(*columns, selector)
        numba_mask = match_mask_numba(*columns, selector)
        assert np.array_equal(numpy_mask, numba_mask), f"kernel disagreement on {name!r}"

        numpy_time = time_kernel(match_mask_numpy, columns, selector, args.repeats)
        numba_time = time_kernel(match_mask_numba, columns, selector, args.repeats)
        ratio = numpy_time / numba_time if numba_time > 0 else float("inf")
        print(f"{name:<22} {numpy_time * 1e3:>10.2f}ms {numba_time * 1e3:>10.2f}ms {ratio:>8.2f}x")


if __name__ == "__main__":
    main()
