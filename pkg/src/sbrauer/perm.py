"""Finite permutations of {1..m}.

Points are 1-based throughout.  Composition is in *diagram order*:
``compose(p, q)`` applies ``p`` first, then ``q``, so that stacking one
diagram on top of another corresponds to left-to-right multiplication.
The choice is pinned by the homomorphism tests in the signed-permutation
layer; flipping it would silently break them.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence


class Parity(Enum):
    EVEN = 0
    ODD = 1

    def __mul__(self, other: "Parity") -> "Parity":
        return Parity((self.value + other.value) % 2)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..m}, stored as the tuple of images of 1..m."""

    images: tuple[int, ...]

    def __post_init__(self):
        m = len(self.images)
        seen = [False] * m
        for x in self.images:
            if not isinstance(x, int) or not 1 <= x <= m:
                raise ValueError(f"image {x!r} out of range 1..{m}")
            if seen[x - 1]:
                raise ValueError(f"image {x} repeated; not a bijection")
            seen[x - 1] = True

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(tuple(range(1, m + 1)))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __str__(self) -> str:
        return format_cycles(self)


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles in canonical form.

    Each cycle starts at its minimum element, cycles are sorted by first
    element, and fixed points are omitted (they are recoverable from
    ``degree``).
    """

    cycles: tuple[tuple[int, ...], ...]
    degree: int

    def to_permutation(self) -> Permutation:
        images = list(range(1, self.degree + 1))
        for cycle in self.cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return Permutation(tuple(images))

    def fixed_points(self) -> tuple[int, ...]:
        moved = {p for cycle in self.cycles for p in cycle}
        return tuple(p for p in range(1, self.degree + 1) if p not in moved)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q``: the image of i is q(p(i)).

    >>> p = parse_cycles("(1 2)(3 4)", 4)
    >>> q = parse_cycles("(1 3)", 4)
    >>> format_cycles(compose(p, q))
    '(1 2 3 4)'
    """
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")
    return Permutation(tuple(q.images[x - 1] for x in p.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, x in enumerate(p.images, start=1):
        inv[x - 1] = i
    return Permutation(tuple(inv))


def cycles(p: Permutation) -> CycleDecomposition:
    """Canonical cycle decomposition of ``p``.

    Visiting points in increasing order guarantees each cycle starts at
    its minimum and the cycle list is sorted.

    >>> cycles(parse_cycles("(2 4)(1 3)", 4)).cycles
    ((1, 3), (2, 4))
    """
    out = []
    visited = [False] * p.degree
    for i in range(1, p.degree + 1):
        if visited[i - 1]:
            continue
        cycle = []
        j = i
        while not visited[j - 1]:
            visited[j - 1] = True
            cycle.append(j)
            j = p(j)
        if len(cycle) > 1:
            out.append(tuple(cycle))
    return CycleDecomposition(tuple(out), p.degree)


def cycle_count(p: Permutation) -> int:
    """Number of cycles of ``p``, fixed points included."""
    count = 0
    visited = [False] * p.degree
    for i in range(1, p.degree + 1):
        if visited[i - 1]:
            continue
        count += 1
        j = i
        while not visited[j - 1]:
            visited[j - 1] = True
            j = p(j)
    return count


def parity(p: Permutation) -> Parity:
    """Parity of ``p``: even iff degree minus cycle count is even.

    A cycle of length k is a product of k - 1 transpositions, so the
    total transposition count is m - c with c counting fixed points.
    """
    return Parity((p.degree - cycle_count(p)) % 2)


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation: ``e`` or ``()`` for the identity, otherwise
    one or more ``( p1 p2 ... pk )`` groups.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    stripped = text.strip()
    if stripped in ("e", "()"):
        return Permutation.identity(degree)
    if not stripped:
        raise ValueError("empty cycle notation")

    images = list(range(1, degree + 1))
    seen: set[int] = set()
    pos = 0
    found = False
    while pos < len(stripped):
        ch = stripped[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "(":
            raise ValueError(f"unexpected {ch!r} at position {pos}; expected '('")
        close = stripped.find(")", pos)
        if close == -1:
            raise ValueError(f"unclosed '(' at position {pos}")
        body = stripped[pos + 1 : close].split()
        if not body:
            raise ValueError(f"empty cycle at position {pos}")
        points = []
        for token in body:
            try:
                point = int(token)
            except ValueError:
                raise ValueError(f"malformed point {token!r}") from None
            if not 1 <= point <= degree:
                raise ValueError(f"point {point} out of range 1..{degree}")
            if point in seen:
                raise ValueError(f"point {point} repeated")
            seen.add(point)
            points.append(point)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a - 1] = b
        found = True
        pos = close + 1
    if not found:
        raise ValueError("no cycles found")
    return Permutation(tuple(images))


def format_cycles(p: Permutation) -> str:
    """Canonical cycle-notation string; the identity prints as ``e``."""
    decomposition = cycles(p)
    if not decomposition.cycles:
        return "e"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in decomposition.cycles)


def from_cycles(cycle_list: Iterable[Sequence[int]], degree: int) -> Permutation:
    """Build a permutation from disjoint cycles given as point sequences."""
    return CycleDecomposition(
        tuple(tuple(c) for c in cycle_list if len(c) > 1), degree
    ).to_permutation()
