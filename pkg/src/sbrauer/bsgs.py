"""Base and strong generating sets via deterministic Schreier-Sims.

Independent order/membership oracle for permutation groups of small
degree (here at most 24).  The algorithm is the classical deterministic
one (see Holt, Eick, O'Brien, "Handbook of Computational Group Theory",
ch. 4): maintain a stabilizer chain, test every Schreier generator at
each level, and push nontrivial sift residues down the chain.  Base
points are chosen greedily as the smallest point moved, and orbits are
extended in breadth-first order, so two builds from the same generator
list produce identical transversals.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import Sign
from .hyperoct import SignedPermutation
from .perm import Permutation, compose, inverse


@dataclass
class Bsgs:
    """Stabilizer chain: base points, strong generators, and for each
    base point a transversal mapping orbit point -> representative u
    with u(base) = point."""

    degree: int
    base: list[int] = field(default_factory=list)
    strong_gens: list[Permutation] = field(default_factory=list)
    transversals: list[dict[int, Permutation]] = field(default_factory=list)


def _orbit_transversal(degree: int, point: int, gens: list[Permutation]):
    orbit = [point]
    reps = {point: Permutation.identity(degree)}
    i = 0
    while i < len(orbit):
        p = orbit[i]
        i += 1
        for g in gens:
            q = g(p)
            if q not in reps:
                reps[q] = compose(reps[p], g)
                orbit.append(q)
    return orbit, reps


def _smallest_moved(g: Permutation) -> int:
    for i in range(1, g.degree + 1):
        if g(i) != i:
            return i
    raise ValueError("identity moves no point")


def sift(b: Bsgs, p: Permutation) -> Permutation:
    """Factor ``p`` through the transversals; the residue is the
    identity exactly when ``p`` lies in the group."""
    if p.degree != b.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {b.degree}")
    residue, _ = _strip(b, p, 0)
    return residue


def _strip(b: Bsgs, g: Permutation, start: int):
    for level in range(start, len(b.base)):
        image = g(b.base[level])
        rep = b.transversals[level].get(image)
        if rep is None:
            return g, level
        g = compose(g, inverse(rep))
    return g, len(b.base)


def build(generators: list[Permutation], degree: int | None = None) -> Bsgs:
    """Construct a stabilizer chain for the group the generators span.

    An empty generator list yields the trivial group (of the given
    degree, default 1).
    """
    gens = [g for g in generators if not g.is_identity()]
    if degree is None:
        degree = gens[0].degree if gens else 1
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"degree mismatch: {g.degree} != {degree}")
    b = Bsgs(degree)
    if not gens:
        return b

    # Seed the base so every generator moves some base point.
    for g in gens:
        if all(g(pt) == pt for pt in b.base):
            b.base.append(_smallest_moved(g))
    level_gens: list[list[Permutation]] = [
        [g for g in gens if all(g(pt) == pt for pt in b.base[:i])]
        for i in range(len(b.base))
    ]
    orbits: list[list[int]] = []
    for i, point in enumerate(b.base):
        orbit, reps = _orbit_transversal(degree, point, level_gens[i])
        orbits.append(orbit)
        b.transversals.append(reps)

    level = len(b.base) - 1
    while level >= 0:
        extended = False
        for point in orbits[level]:
            u = b.transversals[level][point]
            for x in level_gens[level]:
                target = b.transversals[level][x(point)]
                schreier = compose(compose(u, x), inverse(target))
                if schreier.is_identity():
                    continue
                residue, drop = _strip(b, schreier, level + 1)
                if residue.is_identity():
                    continue
                # New strong generator for levels level+1 .. drop.
                if drop == len(b.base):
                    b.base.append(_smallest_moved(residue))
                    level_gens.append([])
                    orbits.append([])
                    b.transversals.append({})
                for l in range(level + 1, drop + 1):
                    level_gens[l].append(residue)
                    orbit, reps = _orbit_transversal(
                        degree, b.base[l], level_gens[l]
                    )
                    orbits[l] = orbit
                    b.transversals[l] = reps
                level = drop
                extended = True
                break
            if extended:
                break
        if not extended:
            level -= 1

    seen: dict[Permutation, None] = {}
    for gens_at_level in level_gens:
        for g in gens_at_level:
            seen[g] = None
    b.strong_gens = list(seen)
    return b


def order(b: Bsgs) -> int:
    """Exact group order: the product of the basic orbit lengths."""
    total = 1
    for reps in b.transversals:
        total *= len(reps)
    return total


def contains(b: Bsgs, p: Permutation) -> bool:
    return sift(b, p).is_identity()


def standard_generators(n: int, which: str) -> list[SignedPermutation]:
    """Generating sets for the full signed group (``full``) and its even
    subgroup (``even``): adjacent strand swaps plus one sign flip, or a
    paired sign flip for the even case.
    """
    if n < 2:
        raise ValueError(f"generators need n >= 2, got {n}")
    gens = []
    for i in range(1, n):
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        gens.append(
            SignedPermutation(Permutation(tuple(images)), (Sign.POSITIVE,) * n)
        )
    if which == "full":
        flip = (Sign.NEGATIVE,) + (Sign.POSITIVE,) * (n - 1)
    elif which == "even":
        flip = (Sign.NEGATIVE, Sign.NEGATIVE) + (Sign.POSITIVE,) * (n - 2)
    else:
        raise ValueError(f"which must be 'full' or 'even', got {which!r}")
    gens.append(SignedPermutation(Permutation.identity(n), flip))
    return gens
