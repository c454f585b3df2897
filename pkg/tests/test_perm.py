import itertools
import random

import pytest

from sbrauer.perm import (
    Parity,
    Permutation,
    compose,
    cycle_count,
    cycles,
    format_cycles,
    from_cycles,
    inverse,
    parity,
    parse_cycles,
)


def inversion_parity(p: Permutation) -> Parity:
    # Independent oracle: parity by direct inversion counting.
    inversions = sum(
        1
        for i in range(1, p.degree + 1)
        for j in range(i + 1, p.degree + 1)
        if p(i) > p(j)
    )
    return Parity(inversions % 2)


def all_permutations(m):
    for images in itertools.permutations(range(1, m + 1)):
        yield Permutation(images)


def test_constructor_rejects_non_bijections():
    with pytest.raises(ValueError):
        Permutation((1, 1))
    with pytest.raises(ValueError):
        Permutation((1, 3))
    with pytest.raises(ValueError):
        Permutation((0, 1))


def test_compose_identity():
    swap = parse_cycles("(1 2)", 4)
    assert compose(Permutation.identity(4), swap) == swap
    assert compose(swap, Permutation.identity(4)) == swap


def test_compose_golden():
    # Point-by-point: 1->2->2, 2->1->3, 3->4->4, 4->3->1.
    p = parse_cycles("(1 2)(3 4)", 4)
    q = parse_cycles("(1 3)", 4)
    assert format_cycles(compose(p, q)) == "(1 2 3 4)"
    table = {i: q(p(i)) for i in range(1, 5)}
    assert compose(p, q).images == tuple(table[i] for i in range(1, 5))


def test_compose_with_inverse_is_identity():
    p = parse_cycles("(1 7 3 9)(6 2 8 4)(5 10)", 10)
    assert compose(p, inverse(p)).is_identity()
    assert compose(inverse(p), p).is_identity()


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_inverse_golden():
    assert inverse(Permutation.identity(5)).is_identity()
    assert format_cycles(inverse(parse_cycles("(1 2 3 4)", 4))) == "(1 4 3 2)"
    involution = parse_cycles("(1 3)(2 4)", 4)
    assert inverse(involution) == involution


def test_cycles_identity():
    decomposition = cycles(Permutation.identity(10))
    assert decomposition.cycles == ()
    assert len(decomposition.fixed_points()) == 10


def test_cycles_golden_from_mapping():
    mapping = {1: 3, 3: 5, 5: 2, 2: 4, 4: 1, 6: 8, 8: 10, 10: 7, 7: 9, 9: 6}
    p = Permutation(tuple(mapping[i] for i in range(1, 11)))
    assert format_cycles(p) == "(1 3 5 2 4)(6 8 10 7 9)"


def test_cycles_canonicalization():
    # A cycle written starting off its minimum gets rotated.
    p = parse_cycles("(1 8 4 9)(7 2 10 3)(5 12)(6 11)", 12)
    assert format_cycles(p) == "(1 8 4 9)(2 10 3 7)(5 12)(6 11)"


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_cycles_reconstruct_exhaustive(m):
    for p in all_permutations(m):
        decomposition = cycles(p)
        assert decomposition.to_permutation() == p
        covered = sum(len(c) for c in decomposition.cycles)
        assert covered + len(decomposition.fixed_points()) == m


def test_cycles_reconstruct_random():
    rng = random.Random(4021)
    for _ in range(200):
        m = rng.randint(1, 24)
        images = list(range(1, m + 1))
        rng.shuffle(images)
        p = Permutation(tuple(images))
        assert cycles(p).to_permutation() == p


def test_parity_golden():
    assert parity(Permutation.identity(8)) is Parity.EVEN
    # Cycle lengths 4, 4, 2: seven transpositions.
    assert parity(parse_cycles("(1 7 3 9)(6 2 8 4)(5 10)", 10)) is Parity.ODD
    assert parity(parse_cycles("(1 8 4 9)(7 2 10 3)(5 12)(6 11)", 12)) is Parity.EVEN


def test_parity_multiplication_table():
    assert Parity.EVEN * Parity.EVEN is Parity.EVEN
    assert Parity.EVEN * Parity.ODD is Parity.ODD
    assert Parity.ODD * Parity.ODD is Parity.EVEN


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_parity_homomorphism_exhaustive(m):
    perms = list(all_permutations(m))
    for p in perms:
        for q in perms:
            assert parity(compose(p, q)) is parity(p) * parity(q)


def test_parity_homomorphism_random_large():
    rng = random.Random(99)
    for _ in range(300):
        m = rng.randint(6, 24)
        images_p = list(range(1, m + 1))
        images_q = list(range(1, m + 1))
        rng.shuffle(images_p)
        rng.shuffle(images_q)
        p, q = Permutation(tuple(images_p)), Permutation(tuple(images_q))
        assert parity(compose(p, q)) is parity(p) * parity(q)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_parity_matches_inversion_oracle(m):
    for p in all_permutations(m):
        assert parity(p) is inversion_parity(p)


def test_cycle_count_includes_fixed_points():
    assert cycle_count(Permutation.identity(6)) == 6
    assert cycle_count(parse_cycles("(1 2)", 6)) == 5


def test_parse_golden():
    p = parse_cycles("(1 3)(2 4)", 4)
    assert p.images == (3, 4, 1, 2)
    assert parse_cycles("e", 5).is_identity()
    assert parse_cycles("()", 5).is_identity()


def test_parse_format_round_trip():
    assert format_cycles(parse_cycles("(1 2 3 4)", 4)) == "(1 2 3 4)"
    rng = random.Random(7)
    for _ in range(100):
        m = rng.randint(1, 12)
        images = list(range(1, m + 1))
        rng.shuffle(images)
        p = Permutation(tuple(images))
        assert parse_cycles(format_cycles(p), m) == p


@pytest.mark.parametrize(
    "text",
    ["", "(1 2", "1 2)", "(1 2)(2 3)", "(0 1)", "(1 5)", "(1 x)", "3", "( )"],
)
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_cycles(text, 4)


def test_from_cycles():
    p = from_cycles([(1, 2, 3)], 5)
    assert format_cycles(p) == "(1 2 3)"
    assert from_cycles([], 4).is_identity()
