"""Signed permutations: vertical diagrams as a group.

A signed permutation of size n is a permutation of {1..n} plus a sign
per strand; it is the same data as a vertical signed diagram, with
strand i running from top vertex i to bottom vertex n + underlying(i).
The group embeds in the permutations of {1..2n}: writing i* for the
partner of i under the half-swapping involution, a positive strand from
i to k sends i -> k and i* -> k*, while a negative strand sends
i -> k* and i* -> k.  Multiplication applies the left factor first and
multiplies signs along the composed strand.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import perm
from .diagram import Sign, SignedDiagram, is_vertical
from .perm import Permutation


@dataclass(frozen=True)
class SignedPermutation:
    underlying: Permutation
    signs: tuple[Sign, ...]

    def __post_init__(self):
        if len(self.signs) != self.underlying.degree:
            raise ValueError(
                f"{len(self.signs)} signs for degree {self.underlying.degree}"
            )
        if not all(isinstance(s, Sign) for s in self.signs):
            raise ValueError("signs must be Sign values")

    @property
    def n(self) -> int:
        return self.underlying.degree

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(Permutation.identity(n), (Sign.POSITIVE,) * n)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return mul(self, other)

    def __str__(self) -> str:
        return format_signed(self)


def star(i: int, n: int) -> int:
    """The involution exchanging the two halves of {1..2n}."""
    if not 1 <= i <= 2 * n:
        raise ValueError(f"point {i} out of range 1..{2 * n}")
    return i + n if i <= n else i - n


def embed(s: SignedPermutation) -> Permutation:
    """Realize ``s`` as a permutation of {1..2n}.

    For each strand i with k = underlying(i): a positive strand gives
    i -> k and n+i -> n+k; a negative strand gives i -> n+k and
    n+i -> k.
    """
    n = s.n
    images = [0] * (2 * n)
    for i in range(1, n + 1):
        k = s.underlying(i)
        if s.signs[i - 1] is Sign.POSITIVE:
            images[i - 1] = k
            images[n + i - 1] = n + k
        else:
            images[i - 1] = n + k
            images[n + i - 1] = k
    return Permutation(tuple(images))


def mul(a: SignedPermutation, b: SignedPermutation) -> SignedPermutation:
    """Apply ``a`` first, then ``b``; strand signs multiply."""
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} != {b.n}")
    underlying = perm.compose(a.underlying, b.underlying)
    signs = tuple(
        a.signs[i] * b.signs[a.underlying(i + 1) - 1] for i in range(a.n)
    )
    return SignedPermutation(underlying, signs)


def inverse(s: SignedPermutation) -> SignedPermutation:
    """Group inverse: the reversed strand keeps its sign."""
    inv = perm.inverse(s.underlying)
    signs = tuple(s.signs[inv(j) - 1] for j in range(1, s.n + 1))
    return SignedPermutation(inv, signs)


def neg_count(s: SignedPermutation) -> int:
    return sum(1 for sign in s.signs if sign is Sign.NEGATIVE)


def to_diagram(s: SignedPermutation) -> SignedDiagram:
    edges = tuple(
        sorted((i, s.n + s.underlying(i), s.signs[i - 1]) for i in range(1, s.n + 1))
    )
    return SignedDiagram(s.n, edges)


def from_diagram(d: SignedDiagram) -> SignedPermutation:
    if not is_vertical(d):
        raise ValueError("diagram has horizontal edges; not a signed permutation")
    images = [0] * d.n
    signs = [Sign.POSITIVE] * d.n
    for u, v, sign in d.edges:
        images[u - 1] = v - d.n
        signs[u - 1] = sign
    return SignedPermutation(Permutation(tuple(images)), tuple(signs))


def parse_signed(text: str) -> SignedPermutation:
    """Parse window notation: n tokens ``+k`` / ``-k``, token i meaning
    strand i runs to bottom position k with the given sign.
    """
    tokens = text.split()
    if not tokens:
        raise ValueError("empty window notation")
    n = len(tokens)
    images = [0] * n
    signs = [Sign.POSITIVE] * n
    seen = [False] * n
    for i, token in enumerate(tokens, start=1):
        if len(token) < 2 or token[0] not in "+-":
            raise ValueError(f"token {i} {token!r}: expected sign then digits")
        try:
            k = int(token[1:])
        except ValueError:
            raise ValueError(f"token {i} {token!r}: malformed magnitude") from None
        if not 1 <= k <= n:
            raise ValueError(f"token {i} {token!r}: magnitude out of range 1..{n}")
        if seen[k - 1]:
            raise ValueError(f"token {i} {token!r}: position {k} used twice")
        seen[k - 1] = True
        images[i - 1] = k
        signs[i - 1] = Sign.POSITIVE if token[0] == "+" else Sign.NEGATIVE
    return SignedPermutation(Permutation(tuple(images)), tuple(signs))


def format_signed(s: SignedPermutation) -> str:
    return " ".join(
        f"{'+' if sign is Sign.POSITIVE else '-'}{s.underlying(i)}"
        for i, sign in enumerate(s.signs, start=1)
    )


def invert_embedding(p: Permutation) -> SignedPermutation:
    """Recover the signed permutation whose embedding is ``p``.

    Raises ValueError when ``p`` has odd degree or does not pair the two
    halves the way any embedded element must.
    """
    if p.degree % 2 != 0:
        raise ValueError(f"degree {p.degree} is odd; not an embedded element")
    n = p.degree // 2
    images = [0] * n
    signs = [Sign.POSITIVE] * n
    for i in range(1, n + 1):
        image = p(i)
        if image <= n:
            k, sign, partner = image, Sign.POSITIVE, n + image
        else:
            k, sign, partner = image - n, Sign.NEGATIVE, image - n
        if p(n + i) != partner:
            raise ValueError(
                f"not an embedded element: {i} -> {image} but {n + i} -> {p(n + i)}"
            )
        images[i - 1] = k
        signs[i - 1] = sign
    return SignedPermutation(Permutation(tuple(images)), tuple(signs))
