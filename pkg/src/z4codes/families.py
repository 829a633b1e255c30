"""Kerdock, Preparata, octacode and Nordstrom-Robinson constructions, with
parameter reports checked against the closed-form values."""

from __future__ import annotations

from dataclasses import dataclass, field

from .codes import (DEFAULT_CAP, QuaternaryCode, cyclic_code, dual, equal_as_sets,
                    extend_parity, lee_weight_counts)
from .enumerators import (BivariateWeightEnumerator, binary_macwilliams, hwe_direct,
                          hwe_from_swe, macwilliams_swe, swe, swe_of_words)
from .galois_ring import GaloisRing, kerdock_via_trace
from .gray import BinaryCode, GrayImage, gray_image, min_distance_binary
from .z4poly import BinPoly, Z4Poly, default_primitive, generator_poly_g, hensel_lift


def _lift(m: int, h2: BinPoly | None) -> Z4Poly:
    if m < 2:
        raise ValueError("m must be at least 2")
    h2 = default_primitive(m) if h2 is None else h2
    if h2.degree != m:
        raise ValueError(f"h2 has degree {h2.degree}, expected {m}")
    return hensel_lift(h2)


def kerdock_quaternary(m: int, h2: BinPoly | None = None) -> QuaternaryCode:
    """Extended cyclic code generated by g(X), length 2^m, 4^(m+1) words."""
    h = _lift(m, h2)
    return extend_parity(cyclic_code(generator_poly_g(h, m), (1 << m) - 1))


def preparata_quaternary(m: int, h2: BinPoly | None = None) -> QuaternaryCode:
    """Extended cyclic code generated by the Hensel lift h(X) itself."""
    return extend_parity(cyclic_code(_lift(m, h2), (1 << m) - 1))


def octacode() -> QuaternaryCode:
    return kerdock_quaternary(3, BinPoly.from_digits("1011"))


def kerdock_binary(m: int, h2: BinPoly | None = None, cap: int = DEFAULT_CAP) -> BinaryCode:
    return gray_image(kerdock_quaternary(m, h2), cap)


def preparata_binary(m: int, h2: BinPoly | None = None,
                     cap: int = DEFAULT_CAP) -> BinaryCode | GrayImage:
    """Gray image of the Preparata-type code; a lazy :class:`GrayImage` when
    the image has more than ``cap`` words."""
    D = preparata_quaternary(m, h2)
    return gray_image(D, cap) if D.size <= cap else GrayImage(D)


def nordstrom_robinson() -> BinaryCode:
    return gray_image(octacode())


def gray_image_hwe(code: QuaternaryCode, cap: int = DEFAULT_CAP) -> BivariateWeightEnumerator:
    """Hamming enumerator of phi(D), going through the dual when D is too big to list."""
    if code.size <= cap:
        return hwe_from_swe(swe(code, cap))
    C = dual(code)
    return hwe_from_swe(macwilliams_swe(swe(C, cap), C.size))


def trace_crosscheck(m: int, h2: BinPoly | None = None) -> bool:
    """swe of the trace description equals swe of the cyclic construction."""
    ring = GaloisRing(_lift(m, h2))
    words = kerdock_via_trace(ring)
    return swe_of_words(words, 1 << m) == swe(kerdock_quaternary(m, h2))


@dataclass
class Field:
    name: str
    expected: object
    actual: object
    passed: bool | None  # None: not checked

    def to_json(self) -> dict:
        def enc(v):
            return str(v) if isinstance(v, int) and not isinstance(v, bool) and abs(v) >= 2 ** 53 else v
        return {"name": self.name, "expected": enc(self.expected),
                "actual": enc(self.actual), "pass": self.passed}


@dataclass
class FamilyReport:
    family: str
    m: int
    fields: list[Field] = field(default_factory=list)

    def add(self, name, expected, actual) -> None:
        self.fields.append(Field(name, expected, actual, expected == actual))

    def skip(self, name, expected, why: str = "not checked (beyond budget)") -> None:
        self.fields.append(Field(name, expected, why, None))

    @property
    def passed(self) -> bool:
        return all(f.passed is not False for f in self.fields)

    def to_json(self) -> dict:
        return {"family": self.family, "m": self.m, "fields": [f.to_json() for f in self.fields]}

    def __str__(self) -> str:
        lines = [f"{self.family} m={self.m}"]
        for f in self.fields:
            tag = {True: "PASS", False: "FAIL", None: "SKIP"}[f.passed]
            lines.append(f"  [{tag}] {f.name}: expected {f.expected}, actual {f.actual}")
        return "\n".join(lines)


def verify_family(m: int, h2: BinPoly | None = None, max_distance_m: int = 5,
                  workers: int = 1) -> FamilyReport:
    """Build both codes for this m and compare with the closed-form parameters.

    Distances are checked only for m <= ``max_distance_m``: the Kerdock
    image by pairwise enumeration, the Preparata image both from the dual
    enumerator and by an exhaustive Lee weight <= 6 search.
    """
    K = kerdock_quaternary(m, h2)
    P = preparata_quaternary(m, h2)
    n = 1 << m
    rep = FamilyReport("kerdock/preparata", m)
    rep.add("quaternary length", n, K.n)
    rep.add("binary length", 2 * n, 2 * K.n)
    rep.add("kerdock size", 2 ** (2 * m + 2), K.size)
    k = 2 ** (m + 1) - 2 * m - 2
    rep.add("preparata size", 2 ** k, P.size)
    rep.add("preparata is dual of kerdock", True, equal_as_sets(dual(K), P))
    odd = m % 2 == 1 and m >= 3
    if not odd:
        rep.skip("kerdock distance", None, "not checked (m even)")
        rep.skip("preparata distance", None, "not checked (m even)")
        return rep
    dk = 2 ** m - 2 ** ((m - 1) // 2)
    if m > max_distance_m:
        rep.skip("kerdock distance", dk)
        rep.skip("preparata distance (enumerator)", 6)
        rep.skip("preparata distance (search)", 6)
        return rep
    KB = gray_image(K)
    rep.add("kerdock distance", dk, min_distance_binary(KB))
    sweP = macwilliams_swe(swe(K), K.size)
    rep.add("preparata distance (enumerator)", 6, sweP.min_lee_weight())
    counts = lee_weight_counts(P, 6, workers=workers)
    rep.add("preparata distance (search)", 6, min(counts) if counts else None)
    rep.add("weight-6 count agrees", sweP.lee_weights().get(6, 0), counts.get(6, 0))
    WK = hwe_direct(KB)
    rep.add("macwilliams bridge", True, hwe_from_swe(sweP) == binary_macwilliams(WK, K.size))
    if m == 3:
        rep.add("K equals P as sets", True, KB.equal_as_sets(gray_image(P)))
    return rep
