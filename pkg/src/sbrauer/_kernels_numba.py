"""Numba-jitted batch kernels; contracts match the numpy backend."""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def cycle_length_counts(batch):
    b, m = batch.shape
    out = np.zeros((b, m + 1), dtype=np.int64)
    visited = np.zeros(m, dtype=np.bool_)
    for row in range(b):
        visited[:] = False
        for start in range(m):
            if visited[start]:
                continue
            length = 0
            j = start
            while not visited[j]:
                visited[j] = True
                length += 1
                j = batch[row, j]
            out[row, length] += 1
    return out


@njit(cache=True)
def factorial_valuations(limit):
    out = np.zeros(limit + 1, dtype=np.int64)
    for i in range(limit + 1):
        ones = 0
        x = i
        while x:
            x &= x - 1
            ones += 1
        out[i] = i - ones
    return out
