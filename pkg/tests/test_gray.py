import itertools
import random

import numpy as np
import pytest

from oracles import all_vectors, gray_table, lee
from z4codes.codes import CodeTooLarge, QuaternaryCode, enumerate_codewords
from z4codes.families import kerdock_quaternary, octacode, preparata_quaternary
from z4codes.gray import (BinaryCode, GrayImage, component_maps, format_binary_code,
                          gray_image, gray_image_linear_span, gray_inverse, gray_map,
                          image_is_linear, is_distance_invariant, min_distance_binary,
                          parse_binary_code, reed_muller, reed_muller_dimension,
                          swap_condition_holds)


def test_component_maps_table():
    a, b, c = component_maps([0, 1, 2, 3])
    assert a.tolist() == [0, 1, 0, 1]
    assert b.tolist() == [0, 0, 1, 1]
    assert c.tolist() == [0, 1, 1, 0]
    a, b, c = component_maps([0] * 5)
    assert not (a.any() or b.any() or c.any())
    a, b, c = component_maps([2] * 4)
    assert not a.any() and b.all() and c.all()


def test_component_identities():
    i = np.arange(4)
    a, b, c = component_maps(i)
    assert ((a ^ b) == c).all()
    assert ((a + 2 * b.astype(int)) == i).all()


def test_gray_map_examples():
    assert gray_map([0, 1, 2, 3]).tolist() == [0, 0, 1, 1, 0, 1, 1, 0]
    assert not gray_map([0] * 6).any() and len(gray_map([0] * 6)) == 12
    V = all_vectors(3)
    assert (gray_inverse(gray_map(V)) == V).all()


def test_gray_isometry_exhaustive():
    for n in range(1, 5):
        V = all_vectors(n)
        G = gray_map(V).astype(np.int64)
        for a in range(len(V)):
            d = (G[a] != G).sum(axis=1)
            lw = np.array([0, 1, 2, 1])[(V[a] - V) % 4].sum(axis=1)
            assert (d == lw).all()


def test_gray_isometry_random_n8():
    rnd = random.Random(10)
    for _ in range(1000):
        a = [rnd.randrange(4) for _ in range(8)]
        b = [rnd.randrange(4) for _ in range(8)]
        d = sum(x != y for x, y in zip(gray_table(a), gray_table(b)))
        assert d == lee([(x - y) % 4 for x, y in zip(a, b)])
        assert tuple(gray_map(a)) == gray_table(a)


def test_gray_image_sizes():
    assert gray_image(octacode()).size == 256
    assert gray_image(octacode()).length == 16
    z = gray_image(QuaternaryCode.zero(3))
    assert z.size == 1 and not z.words.any()
    assert gray_image(kerdock_quaternary(5)).size == 4096
    with pytest.raises(CodeTooLarge):
        gray_image(preparata_quaternary(5))


def closure_holds(code):
    img = {tuple(r) for r in gray_map(enumerate_codewords(code)).tolist()}
    return all(tuple(x ^ y for x, y in zip(u, v)) in img for u in img for v in img)


def test_image_is_linear_examples():
    D = QuaternaryCode([[1, 1]])
    assert image_is_linear(D) and closure_holds(D)
    assert {tuple(r) for r in gray_image(D).words.tolist()} == {(0, 0, 0, 0), (0, 0, 1, 1),
                                                               (1, 1, 0, 0), (1, 1, 1, 1)}
    D = QuaternaryCode([[1, 0, 1, 2], [0, 1, 1, 3]])
    assert not image_is_linear(D) and not closure_holds(D)
    assert not image_is_linear(octacode())


def test_image_is_linear_modes_agree():
    rnd = random.Random(11)
    for _ in range(60):
        n = rnd.randint(1, 4)
        rows = [[rnd.randrange(4) for _ in range(n)] for _ in range(rnd.randint(1, 3))]
        D = QuaternaryCode(rows)
        verdict = image_is_linear(D)
        assert verdict == image_is_linear(D, exhaustive=True) == closure_holds(D)


def test_swap_condition_examples():
    assert swap_condition_holds(BinaryCode.from_basis([[1] * 8], 8))
    assert not swap_condition_holds(BinaryCode.from_basis([[1, 0, 0, 0]], 4))
    with pytest.raises(ValueError, match="odd length"):
        swap_condition_holds(BinaryCode.from_basis([[1, 1, 1]], 3))


@pytest.mark.parametrize("m", range(2, 7))
def test_swap_condition_even_weight(m):
    n = 2 ** m
    basis = [[1 if j in (0, i) else 0 for j in range(n)] for i in range(1, n)]
    C = BinaryCode.from_basis(basis, n)
    assert C.dimension == n - 1
    assert swap_condition_holds(C)


def test_swap_condition_is_order_sensitive():
    C = reed_muller(2, 4)
    assert swap_condition_holds(C)
    # transposing coordinates 0 and 1 already breaks the condition
    perm = [1, 0] + list(range(2, 16))
    assert not swap_condition_holds(BinaryCode.from_basis(C.words[:, perm], 16))
    assert not swap_condition_holds(reed_muller(3, 6))


@pytest.mark.parametrize("m", range(1, 7))
def test_reed_muller_dimensions(m):
    for r in range(m + 1):
        assert reed_muller(r, m).dimension == reed_muller_dimension(r, m)
    assert reed_muller(0, m).words.tolist() == [[1] * 2 ** m]
    assert reed_muller(m, m).dimension == 2 ** m


def test_reed_muller_13():
    C = reed_muller(1, 3)
    W = C.codewords()
    assert len(W) == 16
    assert min(int(w.sum()) for w in W if w.any()) == 4
    assert min_distance_binary(C) == 4
    with pytest.raises(ValueError):
        reed_muller(4, 3)


def test_reed_muller_half_split():
    # the top variable is zero on the left half and one on the right
    C = reed_muller(1, 3)
    assert C.contains([0, 0, 0, 0, 1, 1, 1, 1])


def test_linear_span_examples():
    S = gray_image_linear_span(QuaternaryCode([[1, 1]]))
    assert S.dimension == 2
    assert S.equal_as_sets(BinaryCode.explicit(gray_image(QuaternaryCode([[1, 1]])).words, 4))
    assert gray_image_linear_span(QuaternaryCode.zero(3)).dimension == 0


def direct_span(code):
    words = gray_map(enumerate_codewords(code))
    return BinaryCode.from_basis(words, 2 * code.n)


def test_linear_span_matches_direct():
    rnd = random.Random(12)
    codes = [octacode(), kerdock_quaternary(4), kerdock_quaternary(5)]
    for _ in range(40):
        n = rnd.randint(1, 6)
        codes.append(QuaternaryCode([[rnd.randrange(4) for _ in range(n)] for _ in range(rnd.randint(1, 4))]))
    for D in codes:
        a, b = gray_image_linear_span(D), direct_span(D)
        assert np.array_equal(a.words, b.words)


def test_linear_span_preparata_m5():
    S = gray_image_linear_span(preparata_quaternary(5))
    assert S.length == 64
    assert min_distance_binary(S) == 2


def test_min_distance():
    assert min_distance_binary(gray_image(octacode())) == 6
    assert min_distance_binary(gray_image(kerdock_quaternary(5))) == 28
    assert min_distance_binary(reed_muller(1, 5)) == 16
    # forced onto the syndrome search, which gives up at the limit
    assert min_distance_binary(reed_muller(1, 5), cap=16, limit=4) is None
    assert min_distance_binary(reed_muller(2, 5), cap=16, limit=8) == 8


def test_min_distance_explicit_brute():
    rnd = random.Random(13)
    for _ in range(20):
        n = rnd.randint(3, 70)
        words = {tuple(rnd.randrange(2) for _ in range(n)) for _ in range(rnd.randint(2, 12))}
        if len(words) < 2:
            continue
        brute = min(sum(x != y for x, y in zip(u, v)) for u, v in itertools.combinations(words, 2))
        assert min_distance_binary(BinaryCode.explicit(list(words), n)) == brute


def test_distance_invariance():
    assert is_distance_invariant(gray_image(octacode()))
    assert is_distance_invariant(reed_muller(2, 4))
    assert not is_distance_invariant(BinaryCode.explicit([[0, 0, 0], [0, 1, 1], [1, 1, 1]], 3))


def test_gray_image_handle():
    H = GrayImage(preparata_quaternary(5))
    assert H.size == 2 ** 52 and H.length == 64
    assert min_distance_binary(H.linear_span()) == 2


def test_binary_file_round_trip():
    for C in (reed_muller(2, 4), gray_image(octacode())):
        text = format_binary_code(C)
        back = parse_binary_code(text)
        assert format_binary_code(back) == text
        assert back.equal_as_sets(C)


@pytest.mark.parametrize("text", ["F2 3 1\n011\n", "F2 3 1 linear\n0121\n", "Z4 3 1 linear\n011\n",
                                  "F2 3 2 linear\n011\n"])
def test_binary_file_errors(text):
    with pytest.raises(ValueError):
        parse_binary_code(text)
