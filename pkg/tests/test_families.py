import json

import numpy as np
import pytest

from z4codes.codes import dual, enumerate_codewords, equal_as_sets
from z4codes.enumerators import swe
from z4codes.families import (gray_image_hwe, kerdock_binary, kerdock_quaternary,
                              nordstrom_robinson, octacode, preparata_binary,
                              preparata_quaternary, trace_crosscheck, verify_family)
from z4codes.gray import GrayImage, gray_image, is_distance_invariant, min_distance_binary
from z4codes.z4poly import BinPoly, primitive_polynomials


def test_kerdock_quaternary_params():
    K3 = kerdock_quaternary(3)
    assert (K3.n, K3.size) == (8, 256)
    assert equal_as_sets(K3, dual(K3))
    K5 = kerdock_quaternary(5)
    assert (K5.n, K5.size) == (32, 4096)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_parity_and_sizes(m):
    K = kerdock_quaternary(m)
    assert K.size == 4 ** (m + 1)
    assert preparata_quaternary(m).size == 4 ** (2 ** m - m - 1)
    if K.size <= 1 << 16:
        assert not (enumerate_codewords(K).astype(int).sum(axis=1) % 4).any()


def test_preparata_m3_is_octacode():
    assert equal_as_sets(preparata_quaternary(3), kerdock_quaternary(3))


def test_preparata_m5():
    P = preparata_quaternary(5)
    assert P.size == 2 ** 52
    assert equal_as_sets(P, dual(kerdock_quaternary(5)))


def test_bad_h2():
    with pytest.raises(ValueError):
        kerdock_quaternary(3, BinPoly.from_digits("101001"))
    with pytest.raises(ValueError):
        kerdock_quaternary(4, BinPoly.from_digits("11111"))


def test_binary_images():
    assert kerdock_binary(3).equal_as_sets(preparata_binary(3))
    KB = kerdock_binary(5)
    assert (KB.length, KB.size, min_distance_binary(KB)) == (64, 4096, 28)
    PB = preparata_binary(5)
    assert isinstance(PB, GrayImage)
    assert (PB.length, PB.size) == (64, 2 ** 52)


def test_nordstrom_robinson():
    NR = nordstrom_robinson()
    assert (NR.length, NR.size) == (16, 256)
    assert min_distance_binary(NR) == 6
    assert is_distance_invariant(NR)


def test_gray_image_hwe_routes_agree():
    from z4codes.codes import QuaternaryCode
    D = QuaternaryCode([[1, 0, 0, 1], [0, 1, 0, 3], [0, 0, 2, 2]])
    assert D.size == 32 and dual(D).size == 8
    assert gray_image_hwe(D) == gray_image_hwe(D, cap=16)
    W = gray_image_hwe(preparata_quaternary(5))
    assert W.total == 2 ** 52 and W.min_weight() == 6


def test_trace_crosscheck():
    assert trace_crosscheck(3)
    assert trace_crosscheck(5)
    assert trace_crosscheck(4)


@pytest.mark.parametrize("h2", primitive_polynomials(5), ids=lambda p: p.to_digits())
def test_other_primitive_polynomials_m5(h2):
    # every choice gives the same parameters; swe equality is recorded, not asserted
    K = kerdock_quaternary(5, h2)
    assert K.size == 4096
    assert equal_as_sets(dual(K), preparata_quaternary(5, h2))
    assert swe(K).min_lee_weight() == 28
    assert trace_crosscheck(5, h2)


def test_verify_family_m3():
    rep = verify_family(3)
    assert rep.passed
    assert all(f.passed for f in rep.fields)
    data = json.loads(json.dumps(rep.to_json()))
    assert data["family"] and data["m"] == 3 and all(f["pass"] for f in data["fields"])


def test_verify_family_m5():
    rep = verify_family(5)
    assert rep.passed and all(f.passed for f in rep.fields)
    names = {f.name for f in rep.fields}
    assert {"kerdock distance", "preparata distance (enumerator)",
            "preparata distance (search)"} <= names


def test_verify_family_m7():
    rep = verify_family(7)
    assert rep.passed
    skipped = {f.name for f in rep.fields if f.passed is None}
    assert "kerdock distance" in skipped
    checked = {f.name for f in rep.fields if f.passed}
    assert {"kerdock size", "preparata size", "quaternary length"} <= checked
    sizes = [f for f in rep.to_json()["fields"] if f["name"] == "preparata size"][0]
    assert sizes["expected"] == str(2 ** 240)


def test_verify_family_even_m():
    rep = verify_family(4)
    assert rep.passed
    assert any(f.passed is None for f in rep.fields)


@pytest.mark.parametrize("m", [3, 4, 5])
def test_trace_words_equal_cyclic_code_with_eps_last(m):
    # observed exact correspondence: (Tr(lambda xi^t))_t followed by the constant coordinate
    from z4codes.galois_ring import GaloisRing, kerdock_via_trace
    for h2 in primitive_polynomials(m):
        T = kerdock_via_trace(GaloisRing.from_binary(h2))
        moved = np.hstack([T[:, 1:], T[:, :1]])
        K = enumerate_codewords(kerdock_quaternary(m, h2))
        assert {r.tobytes() for r in moved} == {r.tobytes() for r in K}
