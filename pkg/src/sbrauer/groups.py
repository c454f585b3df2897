"""Enumeration of the signed permutation group and its even subgroup,
plus the registry of verifiable structural claims.

The group of size n has 2**n * n! elements; the even subgroup keeps the
elements with an even number of negative strands and has 2**(n-1) * n!.
Enumeration order is deterministic: sign vectors first, read as n-bit
numbers with strand 1 most significant, then underlying permutations in
lexicographic order.  Element k of the enumeration is computable from k
alone, which is what lets ``verify`` partition rank ranges into batches
and hand the embedded batches to the kernels.
"""
from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import arith, bsgs, hyperoct
from .diagram import Sign
from .hyperoct import SignedPermutation, embed, format_signed, mul, neg_count
from .kernels import cycle_length_counts, embed_batch, parity_is_even, total_cycles
from .perm import Permutation
from .report import VerificationReport

EXHAUSTIVE_CAP = 7
DEFAULT_SAMPLES = 100_000
DEFAULT_PAIR_SAMPLES = 10_000
DEFAULT_SEED = 20260810
_MAX_COUNTEREXAMPLES = 100


@lru_cache(maxsize=None)
def perm_table(n: int) -> np.ndarray:
    """All permutations of n points, 0-based, in lexicographic order."""
    if not 1 <= n <= 9:
        raise ValueError(f"permutation table limited to 1 <= n <= 9, got {n}")
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64)


def _lex_unrank(rank: int, n: int) -> tuple[int, ...]:
    """Permutation of {1..n} at lexicographic position ``rank``."""
    available = list(range(1, n + 1))
    images = []
    for i in range(n - 1, -1, -1):
        idx, rank = divmod(rank, math.factorial(i))
        images.append(available.pop(idx))
    return tuple(images)


def _mask_signs(mask: int, n: int) -> tuple[Sign, ...]:
    return tuple(
        Sign.NEGATIVE if (mask >> (n - i)) & 1 else Sign.POSITIVE
        for i in range(1, n + 1)
    )


def _mask_row(mask: int, n: int) -> np.ndarray:
    return np.array(
        [(mask >> (n - 1 - j)) & 1 for j in range(n)], dtype=bool
    )


def _even_masks(n: int) -> tuple[int, ...]:
    return tuple(m for m in range(2**n) if bin(m).count("1") % 2 == 0)


def _window_line(perm_row, neg_row) -> str:
    return " ".join(
        f"{'-' if neg else '+'}{int(k) + 1}" for k, neg in zip(perm_row, neg_row)
    )


class ElementStream:
    """Indexed enumeration over a fixed list of sign-vector ranks."""

    def __init__(self, n: int, masks: tuple[int, ...]):
        self.n = n
        self.masks = masks
        self._fact = math.factorial(n)

    def __len__(self) -> int:
        return len(self.masks) * self._fact

    def __iter__(self):
        for mask in self.masks:
            signs = _mask_signs(mask, self.n)
            for images in itertools.permutations(range(1, self.n + 1)):
                yield SignedPermutation(Permutation(images), signs)

    def unrank(self, k: int) -> SignedPermutation:
        if not 0 <= k < len(self):
            raise ValueError(f"rank {k} out of range 0..{len(self) - 1}")
        mask_idx, perm_rank = divmod(k, self._fact)
        return SignedPermutation(
            Permutation(_lex_unrank(perm_rank, self.n)),
            _mask_signs(self.masks[mask_idx], self.n),
        )


def enumerate_signed(n: int, cap: int = EXHAUSTIVE_CAP) -> ElementStream:
    """All 2**n * n! signed permutations, in enumeration order."""
    _check_exhaustive(n, cap)
    return ElementStream(n, tuple(range(2**n)))


def enumerate_even(n: int, cap: int = EXHAUSTIVE_CAP) -> ElementStream:
    """The 2**(n-1) * n! elements with an even number of negative strands."""
    _check_exhaustive(n, cap)
    return ElementStream(n, _even_masks(n))


def _check_exhaustive(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError(f"size must be positive, got {n}")
    if n > cap:
        raise ValueError(f"n={n} exceeds the exhaustive cap {cap}")


def even_binomial_count(n: int) -> int:
    """Sum of binomial(n, k) over even k; always equals 2**(n-1)."""
    if n < 1:
        raise ValueError(f"size must be positive, got {n}")
    return sum(math.comb(n, k) for k in range(0, n + 1, 2))


@dataclass(frozen=True)
class CycleType:
    """Weakly decreasing cycle lengths, fixed points as parts of size 1."""

    partition: tuple[int, ...]


def cycle_type(p: Permutation) -> CycleType:
    lengths = []
    visited = [False] * p.degree
    for i in range(1, p.degree + 1):
        if visited[i - 1]:
            continue
        length = 0
        j = i
        while not visited[j - 1]:
            visited[j - 1] = True
            length += 1
            j = p(j)
        lengths.append(length)
    return CycleType(tuple(sorted(lengths, reverse=True)))


# --------------------------------------------------------------------------
# Claim registry
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Claim:
    claim_id: str
    domain: str  # 'all' | 'positive' | 'negative' | 'order' | 'normality' | 'valuation'
    even_n_only: bool
    description: str


CLAIMS: dict[str, Claim] = {
    c.claim_id: c
    for c in (
        Claim(
            "lem_2_1",
            "positive",
            False,
            "all-positive elements embed evenly, with doubled cycle type",
        ),
        Claim(
            "lem_2_3",
            "negative",
            False,
            "all-negative elements embed with every cycle length even",
        ),
        Claim(
            "lem_2_6",
            "negative",
            False,
            "all-negative elements embed fixed-point-free with cycle count "
            "congruent to n mod 2",
        ),
        Claim(
            "cor_2_7",
            "negative",
            False,
            "all-negative embeddings alternate sides at every step of every cycle",
        ),
        Claim(
            "cor_2_8",
            "negative",
            True,
            "for even n, an all-negative element never embeds as a single "
            "cycle on all 2n points",
        ),
        Claim(
            "prop_2_9",
            "negative",
            True,
            "for even n, all-negative elements embed evenly",
        ),
        Claim(
            "thm_3_1",
            "all",
            False,
            "an element embeds evenly iff it has an even number of negative "
            "strands",
        ),
        Claim(
            "thm_3_2_order",
            "order",
            False,
            "the even subgroup has exactly 2**(n-1) * n! elements",
        ),
        Claim(
            "thm_3_2_intersection",
            "all",
            False,
            "the even-strand filter and the even-embedding filter select the "
            "same subset, of size 2**(n-1) * n!",
        ),
        Claim(
            "thm_3_2_normal",
            "normality",
            False,
            "conjugation preserves evenness of the negative-strand count",
        ),
        Claim(
            "cor_3_4",
            "valuation",
            False,
            "the product of the top half of 1..n has 2-adic valuation "
            "exactly floor(n/2)",
        ),
    )
}


def _element_check(claim_id: str, n: int, perms: np.ndarray, negative: np.ndarray) -> np.ndarray:
    """Vectorized per-element predicate over a batch; True means the
    claim holds for that element."""
    sigma = embed_batch(perms, negative)
    if claim_id == "cor_2_7":
        sides = np.arange(2 * n, dtype=np.int64) < n
        return ((sigma < n) != sides).all(axis=1)
    counts = cycle_length_counts(sigma)
    if claim_id == "lem_2_1":
        under = cycle_length_counts(np.ascontiguousarray(perms))
        doubled = (counts[:, 1 : n + 1] == 2 * under[:, 1:]).all(axis=1)
        short = (counts[:, n + 1 :] == 0).all(axis=1)
        return parity_is_even(counts) & doubled & short
    if claim_id == "lem_2_3":
        return (counts[:, 1::2] == 0).all(axis=1)
    if claim_id == "lem_2_6":
        return (counts[:, 1] == 0) & (total_cycles(counts) % 2 == n % 2)
    if claim_id == "cor_2_8":
        return total_cycles(counts) != 1
    if claim_id == "prop_2_9":
        return parity_is_even(counts)
    if claim_id in ("thm_3_1", "thm_3_2_intersection"):
        neg_even = negative.sum(axis=1) % 2 == 0
        return parity_is_even(counts) == neg_even
    raise ValueError(f"claim {claim_id!r} has no element predicate")


def _sweep_range(claim_id: str, n: int, masks: tuple[int, ...], lo: int, hi: int):
    """Check enumeration ranks [lo, hi); returns (checked, failing ranks)."""
    table = perm_table(n)
    fact = len(table)
    fails: list[int] = []
    k = lo
    while k < hi:
        mask_idx, offset = divmod(k, fact)
        take = min(hi - k, fact - offset)
        rows = table[offset : offset + take]
        negative = np.broadcast_to(_mask_row(masks[mask_idx], n), (take, n))
        ok = _element_check(claim_id, n, rows, negative)
        for i in np.flatnonzero(~ok):
            fails.append(k + int(i))
        k += take
    return hi - lo, fails


def _domain_masks(domain: str, n: int) -> tuple[int, ...]:
    if domain == "all":
        return tuple(range(2**n))
    if domain == "positive":
        return (0,)
    if domain == "negative":
        return (2**n - 1,)
    raise ValueError(f"no mask domain for {domain!r}")


def _run_exhaustive(claim_id: str, n: int, masks: tuple[int, ...], jobs: int):
    total = len(masks) * math.factorial(n)
    if jobs <= 1 or total < 20_000:
        return _sweep_range(claim_id, n, masks, 0, total)
    bounds = [(total * i) // jobs for i in range(jobs + 1)]
    chunks = [
        (claim_id, n, masks, bounds[i], bounds[i + 1])
        for i in range(jobs)
        if bounds[i] < bounds[i + 1]
    ]
    try:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_worker, chunks))
    except Exception:
        # Pools can be unavailable in restricted environments; the
        # partitioning is only an optimization, so fall back.
        results = [_sweep_worker(c) for c in chunks]
    checked = sum(r[0] for r in results)
    fails = sorted(rank for r in results for rank in r[1])
    return checked, fails


def _sweep_worker(args):
    return _sweep_range(*args)


def _run_sampled(claim_id: str, n: int, domain: str, samples: int, seed: int):
    rng = np.random.default_rng(seed)
    remaining = samples
    fails: list[str] = []
    base = np.arange(n, dtype=np.int64)
    while remaining > 0:
        b = min(20_000, remaining)
        perms = rng.permuted(np.broadcast_to(base, (b, n)), axis=1)
        if domain == "all":
            negative = rng.integers(0, 2, size=(b, n)).astype(bool)
        elif domain == "positive":
            negative = np.zeros((b, n), dtype=bool)
        else:
            negative = np.ones((b, n), dtype=bool)
        ok = _element_check(claim_id, n, perms, negative)
        for i in np.flatnonzero(~ok):
            if len(fails) < _MAX_COUNTEREXAMPLES:
                fails.append(_window_line(perms[i], negative[i]))
        remaining -= b
    return samples, fails


def _random_even_element(rng, n: int) -> SignedPermutation:
    images = tuple(int(x) + 1 for x in rng.permutation(n))
    bits = [bool(rng.integers(0, 2)) for _ in range(n - 1)]
    bits.append(sum(bits) % 2 == 1)  # force even weight
    signs = tuple(Sign.NEGATIVE if b else Sign.POSITIVE for b in bits)
    return SignedPermutation(Permutation(images), signs)


def _random_element(rng, n: int) -> SignedPermutation:
    images = tuple(int(x) + 1 for x in rng.permutation(n))
    signs = tuple(
        Sign.NEGATIVE if rng.integers(0, 2) else Sign.POSITIVE for _ in range(n)
    )
    return SignedPermutation(Permutation(images), signs)


def _check_order(n: int, cap: int, oracle: str):
    expected = 2 ** (n - 1) * math.factorial(n)
    if oracle == "bsgs" or n > cap:
        generators = [embed(g) for g in bsgs.standard_generators(n, "even")]
        order = bsgs.order(bsgs.build(generators))
        mode = "bsgs"
    else:
        order = len(enumerate_even(n, cap=cap))
        mode = "exhaustive"
    fails = [] if order == expected else [f"order={order} expected={expected}"]
    return order, fails, mode


def _check_normality(n: int, cap: int, samples: int, seed: int, oracle: str):
    """Conjugate subgroup elements by group elements and test membership."""
    use_bsgs = oracle == "bsgs"
    member_oracle = None
    if use_bsgs:
        generators = [embed(g) for g in bsgs.standard_generators(n, "even")]
        member_oracle = bsgs.build(generators)

    def in_subgroup(s: SignedPermutation) -> bool:
        if member_oracle is not None:
            return bsgs.contains(member_oracle, embed(s))
        return neg_count(s) % 2 == 0

    fails: list[str] = []
    checked = 0
    if n <= 3:
        group = list(enumerate_signed(n, cap=cap))
        sub = [a for a in group if neg_count(a) % 2 == 0]
        for g in group:
            g_inv = hyperoct.inverse(g)
            for a in sub:
                checked += 1
                if not in_subgroup(mul(mul(g, a), g_inv)):
                    if len(fails) < _MAX_COUNTEREXAMPLES:
                        fails.append(f"{format_signed(g)} | {format_signed(a)}")
        mode = "exhaustive"
    else:
        rng = np.random.default_rng(seed)
        for _ in range(samples):
            g = _random_element(rng, n)
            a = _random_even_element(rng, n)
            checked += 1
            if not in_subgroup(mul(mul(g, a), hyperoct.inverse(g))):
                if len(fails) < _MAX_COUNTEREXAMPLES:
                    fails.append(f"{format_signed(g)} | {format_signed(a)}")
        mode = "sampled"
    return checked, fails, mode


def verify(
    claim_id: str,
    n: int,
    cap: int = EXHAUSTIVE_CAP,
    jobs: int = 1,
    oracle: str = "enumeration",
    samples: int | None = None,
    seed: int = DEFAULT_SEED,
) -> VerificationReport:
    """Check one registered claim at size ``n``.

    Element claims are exhaustive up to ``cap`` and switch to uniform
    random sampling beyond it (sample count is reported as ``checked``
    with mode ``sampled``).
    """
    if claim_id not in CLAIMS:
        raise ValueError(f"unknown claim {claim_id!r}")
    if oracle not in ("enumeration", "bsgs"):
        raise ValueError(f"unknown oracle {oracle!r}")
    if n < 1:
        raise ValueError(f"size must be positive, got {n}")
    claim = CLAIMS[claim_id]
    start = time.perf_counter()

    if claim.domain == "valuation":
        if n < 2:
            return VerificationReport(claim_id, n, 0, (), 0.0, "vacuous")
        inner = arith.verify_corollary(n)
        return VerificationReport(
            claim_id, n, inner.checked, inner.counterexamples,
            time.perf_counter() - start, inner.mode,
        )

    if claim.even_n_only and n % 2 == 1:
        return VerificationReport(claim_id, n, 0, (), time.perf_counter() - start, "vacuous")

    if claim.domain == "order":
        checked, fails, mode = _check_order(n, cap, oracle)
        return VerificationReport(
            claim_id, n, checked, tuple(fails), time.perf_counter() - start, mode
        )

    if claim.domain == "normality":
        pair_samples = DEFAULT_PAIR_SAMPLES if samples is None else samples
        checked, fails, mode = _check_normality(n, cap, pair_samples, seed, oracle)
        return VerificationReport(
            claim_id, n, checked, tuple(fails), time.perf_counter() - start, mode
        )

    masks = _domain_masks(claim.domain, n)
    if n <= cap:
        checked, fail_ranks = _run_exhaustive(claim_id, n, masks, jobs)
        stream = ElementStream(n, masks)
        fails = tuple(
            format_signed(stream.unrank(rank))
            for rank in fail_ranks[:_MAX_COUNTEREXAMPLES]
        )
        mode = "exhaustive"
    else:
        checked, fail_lines = _run_sampled(
            claim_id, n, claim.domain, DEFAULT_SAMPLES if samples is None else samples, seed
        )
        fails = tuple(fail_lines)
        mode = "sampled"

    extra: tuple[str, ...] = ()
    if claim_id == "thm_3_2_intersection" and mode == "exhaustive":
        count = len(_even_masks(n)) * math.factorial(n)
        expected = 2 ** (n - 1) * math.factorial(n)
        if count != expected:
            extra = (f"cardinality={count} expected={expected}",)
    return VerificationReport(
        claim_id, n, checked, fails + extra, time.perf_counter() - start, mode
    )


def verify_all(
    n: int,
    cap: int = EXHAUSTIVE_CAP,
    jobs: int = 1,
    oracle: str = "enumeration",
    seed: int = DEFAULT_SEED,
) -> list[VerificationReport]:
    """Run every registered claim at size ``n``, in registry order."""
    return [
        verify(claim_id, n, cap=cap, jobs=jobs, oracle=oracle, seed=seed)
        for claim_id in CLAIMS
    ]


def verify_group_structure(
    n: int,
    cap: int = EXHAUSTIVE_CAP,
    samples: int = DEFAULT_PAIR_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> VerificationReport:
    """Check that the even elements really form a normal subgroup of
    index 2: closure under product and inverse, the order formula, and
    conjugation-invariance.  Exhaustive for n <= 3, sampled above.
    """
    start = time.perf_counter()
    checked = 0
    fails: list[str] = []
    full_order = 2**n * math.factorial(n)
    sub_order = len(enumerate_even(n, cap=cap))
    checked += 1
    if sub_order != 2 ** (n - 1) * math.factorial(n):
        fails.append(f"order={sub_order}")
    checked += 1
    if full_order != 2 * sub_order:
        fails.append(f"index={full_order / sub_order}")

    rng = np.random.default_rng(seed)
    if n <= 3:
        sub = list(enumerate_even(n, cap=cap))
        pairs = ((a, b) for a in sub for b in sub)
        inverses = sub
    else:
        pairs = (
            (_random_even_element(rng, n), _random_even_element(rng, n))
            for _ in range(samples)
        )
        inverses = [_random_even_element(rng, n) for _ in range(samples)]
    for a, b in pairs:
        checked += 1
        if neg_count(mul(a, b)) % 2 != 0:
            if len(fails) < _MAX_COUNTEREXAMPLES:
                fails.append(f"closure: {format_signed(a)} | {format_signed(b)}")
    for a in inverses:
        checked += 1
        if neg_count(hyperoct.inverse(a)) % 2 != 0:
            if len(fails) < _MAX_COUNTEREXAMPLES:
                fails.append(f"inverse: {format_signed(a)}")
    norm_checked, norm_fails, mode = _check_normality(
        n, cap, samples, seed, "enumeration"
    )
    checked += norm_checked
    fails.extend(f"normality: {line}" for line in norm_fails)
    return VerificationReport(
        "group_structure", n, checked, tuple(fails),
        time.perf_counter() - start, mode,
    )
