"""2-adic valuations of factorials and falling products.

The quantity of interest is P(n) = n(n-1)...(floor(n/2)+1), the product
of the top half of 1..n.  Its 2-adic valuation is exactly floor(n/2),
which pins the order of a Sylow 2-subgroup of any group of order P(n)
at 2**floor(n/2).  Valuations come from Legendre's formula, so sweeping
n up to a million is cheap; exact big-integer factorization backs the
small cases.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .kernels import factorial_valuations
from .report import VerificationReport

EXACT_LIMIT = 30


@dataclass(frozen=True)
class ValuationResult:
    """2-adic valuation of P(n), with ``odd_cofactor_checked`` set when
    the exact product was factored as 2**valuation times an odd k."""

    n: int
    valuation: int
    odd_cofactor_checked: bool


def nu2_factorial(n: int) -> int:
    """Legendre's formula: sum of floor(n / 2**i) over i >= 1."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    total = 0
    power = 2
    while power <= n:
        total += n // power
        power *= 2
    return total


def nu2_falling_product(n: int, exact: bool | None = None) -> ValuationResult:
    """Valuation of P(n) = n(n-1)...(floor(n/2)+1).

    With ``exact`` (default: n <= EXACT_LIMIT) the product is computed
    exactly, its factor of two stripped, and the odd cofactor verified.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    half = n // 2
    valuation = nu2_factorial(n) - nu2_factorial(half)
    if exact is None:
        exact = n <= EXACT_LIMIT
    checked = False
    if exact:
        product = math.prod(range(half + 1, n + 1))
        twos = 0
        while product % 2 == 0:
            product //= 2
            twos += 1
        if twos != valuation or product % 2 == 0:
            raise AssertionError(
                f"valuation mismatch at n={n}: exact {twos}, Legendre {valuation}"
            )
        checked = True
    return ValuationResult(n, valuation, checked)


def sylow2_exponent(n: int) -> int:
    """floor(n/2): the exact power of two dividing P(n), hence the
    order exponent of a Sylow 2-subgroup of any group of order P(n)."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return n // 2


def _failures_to_lines(ns, values, expected) -> tuple[str, ...]:
    return tuple(
        f"n={int(k)} valuation={int(v)} expected={int(e)}"
        for k, v, e in zip(ns, values, expected)
    )


def verify_corollary(limit: int, exact_limit: int = EXACT_LIMIT) -> VerificationReport:
    """Assert nu2(P(n)) == floor(n/2) for every 2 <= n <= limit.

    The equality simultaneously gives 2**floor(n/2) | P(n) and
    2**(floor(n/2)+1) does not divide P(n).
    """
    if limit < 2:
        raise ValueError(f"limit must be at least 2, got {limit}")
    start = time.perf_counter()
    vals = factorial_valuations(limit)
    ns = np.arange(2, limit + 1, dtype=np.int64)
    falling = vals[ns] - vals[ns // 2]
    expected = ns // 2
    bad = np.flatnonzero(falling != expected)
    fails = _failures_to_lines(ns[bad], falling[bad], expected[bad])
    for n in range(2, min(limit, exact_limit) + 1):
        result = nu2_falling_product(n, exact=True)
        if not result.odd_cofactor_checked or result.valuation != n // 2:
            fails += (f"n={n} exact check failed",)
    return VerificationReport(
        "cor_3_4", limit, limit - 1, fails, time.perf_counter() - start
    )


def verify_divisibility(limit: int, exact_limit: int = EXACT_LIMIT) -> VerificationReport:
    """Assert 2**floor(n/2) * floor(n/2)! divides n! for 2 <= n <= limit."""
    if limit < 2:
        raise ValueError(f"limit must be at least 2, got {limit}")
    start = time.perf_counter()
    vals = factorial_valuations(limit)
    ns = np.arange(2, limit + 1, dtype=np.int64)
    slack = vals[ns] - vals[ns // 2] - ns // 2
    bad = np.flatnonzero(slack < 0)
    fails = tuple(f"n={int(k)} valuation deficit {int(s)}" for k, s in zip(ns[bad], slack[bad]))
    for n in range(2, min(limit, exact_limit) + 1):
        divisor = 2 ** (n // 2) * math.factorial(n // 2)
        if math.factorial(n) % divisor != 0:
            fails += (f"n={n} exact division failed",)
    return VerificationReport(
        "divisibility", limit, limit - 1, fails, time.perf_counter() - start
    )
