"""Backend selection for the batch kernels.

The exhaustive sweeps spend essentially all their time computing cycle
statistics of embedded permutations, so those inner loops are jitted
with numba when it is available.  Set ``SBRAUER_NO_NUMBA=1`` to force
the pure-numpy implementation (same results, slower on big sweeps; see
``benchmarks/bench_kernels.py`` for the comparison).

Shared helpers that are already fully vectorized (``embed_batch``) live
here and are backend-independent.
"""
from __future__ import annotations

import os

import numpy as np

NO_NUMBA_ENV = "SBRAUER_NO_NUMBA"

if os.environ.get(NO_NUMBA_ENV, "").strip().lower() in {"1", "true", "yes", "on"}:
    from ._kernels_numpy import cycle_length_counts, factorial_valuations

    BACKEND = "numpy"
else:
    try:
        from ._kernels_numba import cycle_length_counts, factorial_valuations

        BACKEND = "numba"
    except ImportError:  # pragma: no cover - depends on environment
        from ._kernels_numpy import cycle_length_counts, factorial_valuations

        BACKEND = "numpy"

__all__ = [
    "BACKEND",
    "NO_NUMBA_ENV",
    "cycle_length_counts",
    "factorial_valuations",
    "embed_batch",
    "total_cycles",
    "parity_is_even",
]


def embed_batch(perms: np.ndarray, negative: np.ndarray) -> np.ndarray:
    """Embed a batch of signed permutations into degree-2n form.

    ``perms`` is (B, n) with 0-based images; ``negative`` is a boolean
    (B, n) mask of negative strands.  Returns (B, 2n) 0-based images:
    positive strands map i -> k, n+i -> n+k; negative strands swap the
    halves of the image.
    """
    b, n = perms.shape
    out = np.empty((b, 2 * n), dtype=np.int64)
    out[:, :n] = np.where(negative, perms + n, perms)
    out[:, n:] = np.where(negative, perms, perms + n)
    return out


def total_cycles(counts: np.ndarray) -> np.ndarray:
    """Cycle count per row from a cycle-length histogram."""
    return counts[:, 1:].sum(axis=1)


def parity_is_even(counts: np.ndarray) -> np.ndarray:
    """Even-permutation mask per row from a cycle-length histogram."""
    m = counts.shape[1] - 1
    return (m - total_cycles(counts)) % 2 == 0
