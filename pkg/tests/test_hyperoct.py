import itertools
import random

import pytest

from sbrauer.diagram import Sign, SignedDiagram, validate
from sbrauer.diagram import compose as diagram_compose
from sbrauer.hyperoct import (
    SignedPermutation,
    embed,
    format_signed,
    from_diagram,
    inverse,
    invert_embedding,
    mul,
    neg_count,
    parse_signed,
    star,
    to_diagram,
)
from sbrauer.perm import Permutation, compose, format_cycles, parse_cycles, parity

PLUS, MINUS = Sign.POSITIVE, Sign.NEGATIVE

SIZE_2_IMAGE_SET = {
    "e",
    "(2 4)",
    "(1 3)",
    "(1 3)(2 4)",
    "(1 2)(3 4)",
    "(1 2 3 4)",
    "(1 4 3 2)",
    "(1 4)(2 3)",
}


def all_signed(n):
    for images in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((PLUS, MINUS), repeat=n):
            yield SignedPermutation(Permutation(images), signs)


def test_star_golden():
    assert star(1, 5) == 6
    assert star(10, 5) == 5
    with pytest.raises(ValueError):
        star(0, 5)
    with pytest.raises(ValueError):
        star(11, 5)


@pytest.mark.parametrize("n", range(1, 9))
def test_star_involution(n):
    for i in range(1, 2 * n + 1):
        assert star(star(i, n), n) == i


def test_embed_single_negative_strand():
    s = SignedPermutation(Permutation.identity(2), (PLUS, MINUS))
    assert format_cycles(embed(s)) == "(2 4)"


def test_embed_size_2_full_image_set():
    images = {format_cycles(embed(s)) for s in all_signed(2)}
    assert images == SIZE_2_IMAGE_SET


def test_embed_all_positive_five_cycle():
    s = SignedPermutation(parse_cycles("(1 3 5 2 4)", 5), (PLUS,) * 5)
    assert format_cycles(embed(s)) == "(1 3 5 2 4)(6 8 10 7 9)"


def test_embed_all_negative_size_5_golden():
    # The frozen underlying is validated by brute force: it is the only
    # all-negative element of size 5 with this image.
    target = "(1 7 3 9)(2 8 4 6)(5 10)"
    matches = [
        images
        for images in itertools.permutations(range(1, 6))
        if format_cycles(
            embed(SignedPermutation(Permutation(images), (MINUS,) * 5))
        )
        == target
    ]
    assert matches == [parse_cycles("(1 2 3 4)", 5).images]


def test_embed_all_negative_size_6_golden():
    target = "(1 8 4 9)(2 10 3 7)(5 12)(6 11)"
    matches = [
        images
        for images in itertools.permutations(range(1, 7))
        if format_cycles(
            embed(SignedPermutation(Permutation(images), (MINUS,) * 6))
        )
        == target
    ]
    assert matches == [parse_cycles("(1 2 4 3)(5 6)", 6).images]


def test_mul_sign_cancellation():
    a = SignedPermutation(Permutation.identity(2), (MINUS, PLUS))
    assert mul(a, a) == SignedPermutation.identity(2)


def test_mul_golden():
    a = SignedPermutation(parse_cycles("(1 2)", 2), (PLUS, PLUS))
    b = SignedPermutation(Permutation.identity(2), (MINUS, PLUS))
    product = mul(a, b)
    assert product == SignedPermutation(parse_cycles("(1 2)", 2), (PLUS, MINUS))
    assert format_cycles(embed(product)) == "(1 2 3 4)"
    assert embed(product) == compose(embed(a), embed(b))


def test_mul_size_mismatch():
    with pytest.raises(ValueError):
        mul(SignedPermutation.identity(2), SignedPermutation.identity(3))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_inverse_is_group_inverse(n):
    for s in all_signed(n):
        assert mul(s, inverse(s)) == SignedPermutation.identity(n)
        assert mul(inverse(s), s) == SignedPermutation.identity(n)


def test_inverse_golden():
    assert inverse(SignedPermutation.identity(3)) == SignedPermutation.identity(3)
    flips = SignedPermutation(Permutation.identity(3), (MINUS,) * 3)
    assert inverse(flips) == flips
    s = SignedPermutation(parse_cycles("(1 2 3)", 3), (PLUS, MINUS, PLUS))
    assert mul(s, inverse(s)) == SignedPermutation.identity(3)


def test_neg_count():
    assert neg_count(SignedPermutation.identity(4)) == 0
    assert neg_count(SignedPermutation(parse_cycles("(1 2 3 4)", 5), (MINUS,) * 5)) == 5
    assert neg_count(SignedPermutation(Permutation.identity(2), (PLUS, MINUS))) == 1


def test_diagram_round_trip_size_2():
    for s in all_signed(2):
        d = to_diagram(s)
        assert from_diagram(d) == s


def test_from_diagram_rejects_horizontal():
    cap_cup = validate(2, [(1, 2, "+"), (3, 4, "+")])
    with pytest.raises(ValueError, match="horizontal"):
        from_diagram(cap_cup)


def test_identity_round_trip_diagram():
    assert to_diagram(SignedPermutation.identity(3)) == SignedDiagram.identity(3)
    assert from_diagram(SignedDiagram.identity(3)) == SignedPermutation.identity(3)


@pytest.mark.parametrize("n", [1, 2])
def test_diagram_composition_matches_mul(n):
    for a in all_signed(n):
        for b in all_signed(n):
            stacked = diagram_compose(to_diagram(a), to_diagram(b))
            assert stacked.exponent == 0
            assert stacked.diagram == to_diagram(mul(a, b))


def test_parse_signed_golden():
    s = parse_signed("+1 -2")
    assert s == SignedPermutation(Permutation.identity(2), (PLUS, MINUS))
    assert format_cycles(embed(s)) == "(2 4)"
    t = parse_signed("+2 +1")
    assert format_cycles(embed(t)) == "(1 2)(3 4)"


@pytest.mark.parametrize(
    "text",
    ["+1 +1", "+1 -3", "+0 +2", "1 2", "+x +2", "", "+1 +2 +2"],
)
def test_parse_signed_errors(text):
    with pytest.raises(ValueError):
        parse_signed(text)


def test_window_round_trip():
    for n in (1, 2, 3):
        for s in all_signed(n):
            assert parse_signed(format_signed(s)) == s


def test_invert_embedding():
    for s in all_signed(3):
        assert invert_embedding(embed(s)) == s
    with pytest.raises(ValueError, match="not an embedded element"):
        invert_embedding(parse_cycles("(1 2)", 4))
    with pytest.raises(ValueError, match="odd"):
        invert_embedding(Permutation.identity(3))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_embedding_homomorphism_exhaustive(n):
    elements = list(all_signed(n))
    for a in elements:
        for b in elements:
            assert embed(mul(a, b)) == compose(embed(a), embed(b))


def test_embedding_homomorphism_random():
    rng = random.Random(606)
    for _ in range(2000):
        n = rng.randint(4, 12)
        a, b = (_random_signed(rng, n) for _ in range(2))
        assert embed(mul(a, b)) == compose(embed(a), embed(b))


def test_composition_convention_is_pinned():
    # The apply-left-first convention is the one the embedding respects;
    # some pair must break under the opposite convention.
    elements = list(all_signed(2))
    assert any(
        embed(mul(a, b)) != compose(embed(b), embed(a))
        for a in elements
        for b in elements
    )


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_embedding_injective(n):
    images = {embed(s) for s in all_signed(n)}
    assert len(images) == 2**n * _factorial(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_parity_matches_negative_strand_parity(n):
    from sbrauer.perm import Parity

    for s in all_signed(n):
        expected = Parity.EVEN if neg_count(s) % 2 == 0 else Parity.ODD
        assert parity(embed(s)) is expected


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _random_signed(rng, n):
    images = list(range(1, n + 1))
    rng.shuffle(images)
    signs = tuple(PLUS if rng.random() < 0.5 else MINUS for _ in range(n))
    return SignedPermutation(Permutation(tuple(images)), signs)
