"""Pure-numpy batch kernels.

Same contracts as the numba backend; selected by setting
``SBRAUER_NO_NUMBA=1`` or used automatically when numba is missing.
"""
from __future__ import annotations

import numpy as np


def cycle_length_counts(batch: np.ndarray) -> np.ndarray:
    """Cycle-length histogram for each permutation in a batch.

    ``batch`` is (B, m) with 0-based images.  Returns (B, m+1) int64
    where out[b, L] counts the cycles of length L; column 0 is zero.

    Uses pointer doubling: after ceil(log2(m)) squarings, every point
    knows the minimum of its cycle, and two bincounts turn cycle minima
    into a length histogram without any per-row Python loop.
    """
    batch = np.ascontiguousarray(batch, dtype=np.int64)
    b, m = batch.shape
    out = np.zeros((b, m + 1), dtype=np.int64)
    if b == 0 or m == 0:
        return out
    hop = batch.copy()
    lowest = np.broadcast_to(np.arange(m, dtype=np.int64), (b, m)).copy()
    span = 1
    while span < m:
        lowest = np.minimum(lowest, np.take_along_axis(lowest, hop, axis=1))
        hop = np.take_along_axis(hop, hop, axis=1)
        span *= 2
    # lowest[b, j] is now the minimum of the cycle through j.
    row_offset = np.arange(b, dtype=np.int64)[:, None]
    sizes = np.bincount(
        (lowest + row_offset * m).ravel(), minlength=b * m
    ).reshape(b, m)
    # sizes[b, r] is the cycle length when r is a cycle minimum, else 0.
    counts = np.bincount(
        (sizes + row_offset * (m + 1)).ravel(), minlength=b * (m + 1)
    ).reshape(b, m + 1)
    counts[:, 0] = 0
    np.copyto(out, counts)
    return out


def factorial_valuations(limit: int) -> np.ndarray:
    """2-adic valuation of i! for every 0 <= i <= limit.

    Legendre's formula collapses to i minus the binary digit sum of i.
    """
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    values = np.arange(limit + 1, dtype=np.uint64)
    return (values - np.bitwise_count(values)).astype(np.int64)
