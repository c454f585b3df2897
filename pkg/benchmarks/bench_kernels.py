"""Benchmark the numba kernels against the pure-numpy fallback.

Workloads mirror the two hot paths: cycle statistics over the full
size-7 sweep (all 2**7 * 7! = 645120 embedded elements) and the 2-adic
factorial-valuation table up to one million.

Run from the repository root:

    python3 benchmarks/bench_kernels.py
"""
import time

import numpy as np

from sbrauer import _kernels_numpy
from sbrauer.groups import perm_table
from sbrauer.kernels import embed_batch

try:
    from sbrauer import _kernels_numba
except ImportError:
    _kernels_numba = None

SWEEP_N = 7
VALUATION_LIMIT = 10**6
REPEATS = 3


def build_sweep_batch(n: int) -> np.ndarray:
    table = perm_table(n)
    blocks = []
    for mask in range(2**n):
        negative = np.array(
            [(mask >> (n - 1 - j)) & 1 for j in range(n)], dtype=bool
        )
        blocks.append(embed_batch(table, np.broadcast_to(negative, table.shape)))
    return np.concatenate(blocks, axis=0)


def best_of(fn, *args) -> float:
    fn(*args)  # warmup; lets numba compile outside the timed region
    times = []
    for _ in range(REPEATS):
        start = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - start)
    return min(times)


def main() -> None:
    sweep = build_sweep_batch(SWEEP_N)
    print(f"cycle_length_counts on {sweep.shape[0]} x {sweep.shape[1]} sweep batch")
    print(f"factorial_valuations up to {VALUATION_LIMIT}")
    print()
    print(f"{'kernel':<24}{'backend':<10}{'best of ' + str(REPEATS):>14}")

    rows = [("numpy", _kernels_numpy)]
    if _kernels_numba is not None:
        rows.append(("numba", _kernels_numba))
    timings = {}
    for name, module in rows:
        t = best_of(module.cycle_length_counts, sweep)
        timings[("cycles", name)] = t
        print(f"{'cycle_length_counts':<24}{name:<10}{t * 1000:>11.2f} ms")
    for name, module in rows:
        t = best_of(module.factorial_valuations, VALUATION_LIMIT)
        timings[("valuations", name)] = t
        print(f"{'factorial_valuations':<24}{name:<10}{t * 1000:>11.2f} ms")

    if _kernels_numba is not None:
        print()
        for key, label in (("cycles", "cycle_length_counts"), ("valuations", "factorial_valuations")):
            ratio = timings[(key, "numpy")] / timings[(key, "numba")]
            print(f"{label}: numba is {ratio:.1f}x the numpy path")

    check = np.array_equal(
        _kernels_numpy.cycle_length_counts(sweep[:1000]),
        rows[-1][1].cycle_length_counts(sweep[:1000]),
    )
    print(f"\nbackends agree on a sample: {check}")


if __name__ == "__main__":
    main()
