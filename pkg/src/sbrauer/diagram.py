"""Signed Brauer diagrams and their composition.

A diagram of size n is a perfect matching on 2n vertices, drawn as two
rows: vertices 1..n on top, n+1..2n on the bottom.  Every edge carries a
sign.  An edge is *vertical* when it joins the two rows and *horizontal*
when both endpoints sit in the same row.

Composing d1 with d2 stacks d1 on top of d2, identifying bottom vertex
n+j of d1 with top vertex j of d2.  Every identified vertex has degree
two in the stacked graph (one edge from each diagram), so maximal paths
are unambiguous.  Paths connecting the outer boundary become edges of
the product; each path or closed loop is positive when it contains an
even number of negative edges.  Interior loops are deleted but recorded:
a composition yields ``x**(2*n1 + n2)`` times the resulting diagram,
with n1 positive and n2 negative loops.  The exponent is kept symbolic;
x is never evaluated.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable


class Sign(Enum):
    POSITIVE = "+"
    NEGATIVE = "-"

    def __mul__(self, other: "Sign") -> "Sign":
        return Sign.POSITIVE if self is other else Sign.NEGATIVE

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, token) -> "Sign":
        if isinstance(token, Sign):
            return token
        if token in ("+", 1, +1):
            return cls.POSITIVE
        if token in ("-", -1):
            return cls.NEGATIVE
        raise ValueError(f"not a sign: {token!r}")


Edge = tuple[int, int, Sign]


@dataclass(frozen=True)
class SignedDiagram:
    """Perfect matching on {1..2n} with a sign per edge.

    Edges are stored canonically: lower vertex first within each pair,
    pairs sorted by first vertex.  Use :func:`validate` to build one
    from unnormalized input.
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        _check_edges(self.n, self.edges)
        ordered = tuple(sorted(self.edges))
        if ordered != self.edges:
            raise ValueError("edges not in canonical order; use validate()")

    @classmethod
    def identity(cls, n: int) -> "SignedDiagram":
        return cls(n, tuple((i, n + i, Sign.POSITIVE) for i in range(1, n + 1)))

    def __str__(self) -> str:
        return format_diagram(self)


@dataclass(frozen=True)
class ScaledDiagram:
    """A diagram times a power of x, as produced by composition."""

    exponent: int
    diagram: SignedDiagram

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError(f"exponent must be nonnegative, got {self.exponent}")


def _check_edges(n: int, edges: Iterable[Edge]) -> None:
    if n < 1:
        raise ValueError("diagram size must be positive")
    edges = tuple(edges)
    if len(edges) != n:
        raise ValueError(f"expected {n} edges, got {len(edges)}")
    degree = [0] * (2 * n)
    for u, v, sign in edges:
        if not isinstance(sign, Sign):
            raise ValueError(f"edge ({u},{v}) carries no sign")
        for w in (u, v):
            if not 1 <= w <= 2 * n:
                raise ValueError(f"vertex {w} out of range 1..{2 * n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        degree[u - 1] += 1
        degree[v - 1] += 1
    problems = [i + 1 for i, d in enumerate(degree) if d != 1]
    if problems:
        detail = ", ".join(
            f"vertex {w} {'unmatched' if degree[w - 1] == 0 else 'matched twice'}"
            for w in problems
        )
        raise ValueError(f"not a perfect matching: {detail}")


def validate(n: int, raw_edges: Iterable[tuple]) -> SignedDiagram:
    """Check and canonicalize raw ``(u, v, sign)`` triples into a diagram."""
    normalized = []
    for item in raw_edges:
        try:
            u, v, sign = item
        except (TypeError, ValueError):
            raise ValueError(f"edge {item!r} is not a (u, v, sign) triple") from None
        sign = Sign.parse(sign)
        if isinstance(u, bool) or isinstance(v, bool):
            raise ValueError(f"edge {item!r} has non-integer endpoints")
        u, v = int(u), int(v)
        normalized.append((min(u, v), max(u, v), sign))
    return SignedDiagram(n, tuple(sorted(normalized)))


def is_vertical(d: SignedDiagram) -> bool:
    """True iff every edge joins the top row to the bottom row."""
    return all(u <= d.n < v for u, v, _ in d.edges)


def compose(d1: SignedDiagram, d2: SignedDiagram) -> ScaledDiagram:
    """Stack ``d1`` above ``d2`` and resolve paths and loops.

    Returns the product diagram together with the exponent
    ``2 * n1 + n2`` counting interior positive and negative loops.
    """
    if d1.n != d2.n:
        raise ValueError(f"size mismatch: {d1.n} != {d2.n}")
    n = d1.n

    # Stacked-graph vertex numbering: 1..n top boundary, n+1..2n middle
    # (d1's bottom row = d2's top row), 2n+1..3n bottom boundary.
    edge_ends: list[tuple[int, int, Sign]] = []
    incident: list[list[int]] = [[] for _ in range(3 * n + 1)]
    for u, v, sign in d1.edges:
        edge_ends.append((u, v, sign))
    for u, v, sign in d2.edges:
        edge_ends.append((u + n, v + n, sign))
    for idx, (a, b, _) in enumerate(edge_ends):
        incident[a].append(idx)
        incident[b].append(idx)

    def walk(start: int, first_edge: int):
        # Follow the unique path from `start` through degree-2 middle
        # vertices; returns (endpoint, negative edge count, edges used).
        negatives = 0
        used = []
        node, edge = start, first_edge
        while True:
            a, b, sign = edge_ends[edge]
            used.append(edge)
            if sign is Sign.NEGATIVE:
                negatives += 1
            node = b if node == a else a
            if not n < node <= 2 * n:
                return node, negatives, used
            choices = incident[node]
            edge = choices[1] if choices[0] == edge else choices[0]
            if edge in used:  # closed loop back at a middle vertex
                return node, negatives, used

    seen_edges = [False] * len(edge_ends)
    out_edges = []
    boundary = list(range(1, n + 1)) + list(range(2 * n + 1, 3 * n + 1))
    for start in boundary:
        first = incident[start][0]
        if seen_edges[first]:
            continue
        end, negatives, used = walk(start, first)
        for e in used:
            seen_edges[e] = True
        u = start if start <= n else start - n
        v = end if end <= n else end - n
        sign = Sign.POSITIVE if negatives % 2 == 0 else Sign.NEGATIVE
        out_edges.append((min(u, v), max(u, v), sign))

    positive_loops = negative_loops = 0
    for middle in range(n + 1, 2 * n + 1):
        first = next((e for e in incident[middle] if not seen_edges[e]), None)
        if first is None:
            continue
        _, negatives, used = walk(middle, first)
        for e in used:
            seen_edges[e] = True
        if negatives % 2 == 0:
            positive_loops += 1
        else:
            negative_loops += 1

    result = SignedDiagram(n, tuple(sorted(out_edges)))
    return ScaledDiagram(2 * positive_loops + negative_loops, result)


def format_diagram(d: SignedDiagram) -> str:
    """Serialize to the one-line form ``n=2; 1-3:+; 2-4:-``."""
    terms = [f"n={d.n}"] + [f"{u}-{v}:{sign}" for u, v, sign in d.edges]
    return "; ".join(terms)


def parse_diagram(text: str) -> SignedDiagram:
    """Inverse of :func:`format_diagram`.

    Accepts the bare line, or any multi-line text (such as render
    output) containing the line, possibly behind a ``#`` or ``//``
    comment marker.
    """
    payload = None
    for line in text.splitlines() or [""]:
        candidate = line.strip()
        for marker in ("#", "//"):
            if candidate.startswith(marker):
                candidate = candidate[len(marker):].strip()
        if candidate.startswith("n="):
            payload = candidate
            break
    if payload is None:
        raise ValueError("no 'n=...' diagram line found")

    terms = [t.strip() for t in payload.split(";")]
    head = terms[0]
    try:
        n = int(head[2:])
    except ValueError:
        raise ValueError(f"malformed size term {head!r}") from None
    raw_edges = []
    for term in terms[1:]:
        if not term:
            continue
        try:
            pair, sign_char = term.split(":")
            u, v = pair.split("-")
            raw_edges.append((int(u), int(v), Sign.parse(sign_char)))
        except ValueError:
            raise ValueError(f"malformed edge term {term!r}") from None
    return validate(n, raw_edges)


def render(d: SignedDiagram, format: str = "ascii") -> str:
    """Deterministic textual rendering; ``ascii`` or ``dot``.

    Both formats embed the :func:`format_diagram` line, so the output
    round-trips through :func:`parse_diagram`.
    """
    if format == "ascii":
        return _render_ascii(d)
    if format == "dot":
        return _render_dot(d)
    raise ValueError(f"unknown format {format!r}")


def _render_ascii(d: SignedDiagram) -> str:
    n = d.n
    width = len(str(2 * n))
    top = " ".join(str(i).rjust(width) for i in range(1, n + 1))
    bottom = " ".join(str(i).rjust(width) for i in range(n + 1, 2 * n + 1))
    straight = {u: sign for u, v, sign in d.edges if v == u + n}
    strokes = " ".join(
        (f"|{straight[i]}" if i in straight else "").rjust(width)
        for i in range(1, n + 1)
    )
    lines = [top, strokes.rstrip(), bottom]
    for u, v, sign in d.edges:
        if u in straight and v == u + n:
            continue
        if v <= n:
            kind = "top arc"
        elif u > n:
            kind = "bottom arc"
        else:
            kind = "cross"
        lines.append(f"{u}-{v}:{sign}  ({kind})")
    lines.append(format_diagram(d))
    return "\n".join(lines) + "\n"


def _render_dot(d: SignedDiagram) -> str:
    n = d.n
    lines = [
        "graph signed_diagram {",
        f"  // {format_diagram(d)}",
        "  " + "{ rank=same; " + " ".join(f"v{i};" for i in range(1, n + 1)) + " }",
        "  " + "{ rank=same; " + " ".join(f"v{i};" for i in range(n + 1, 2 * n + 1)) + " }",
    ]
    for u, v, sign in d.edges:
        lines.append(f'  v{u} -- v{v} [label="{sign}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
