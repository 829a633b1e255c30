"""Symmetrized and Hamming weight enumerators with exact integer
coefficients, and the MacWilliams transforms between a code and its dual."""

from __future__ import annotations

import json
from collections import Counter
from math import comb

import numpy as np

from .codes import DEFAULT_CAP, QuaternaryCode, enumerate_codewords


class InvalidEnumerator(ValueError):
    pass


class TrivariateWeightEnumerator:
    """sum of x^N0 y^N1 z^N2 over a code, N_i = #coordinates equal to +-i."""

    def __init__(self, n: int, terms: dict[tuple[int, int, int], int]):
        self.n = n
        clean = {}
        for key, c in terms.items():
            if c:
                if sum(key) != n or min(key) < 0:
                    raise ValueError(f"exponents {key} do not sum to {n}")
                clean[tuple(int(k) for k in key)] = int(c)
        self.terms = dict(sorted(clean.items()))

    def __eq__(self, other) -> bool:
        return (isinstance(other, TrivariateWeightEnumerator)
                and self.n == other.n and self.terms == other.terms)

    def __repr__(self) -> str:
        return f"TrivariateWeightEnumerator(n={self.n}, {len(self.terms)} terms)"

    def __str__(self) -> str:
        parts = []
        for (a, b, c), k in sorted(self.terms.items(), key=lambda t: (t[0][1] + 2 * t[0][2], t[0])):
            mono = "".join(f"{v}^{e}" if e > 1 else v for v, e in zip("xyz", (a, b, c)) if e)
            parts.append(f"{k}*{mono}" if mono else str(k))
        return " + ".join(parts) or "0"

    def evaluate(self, x=1, y=1, z=1):
        return sum(k * x ** a * y ** b * z ** c for (a, b, c), k in self.terms.items())

    @property
    def total(self) -> int:
        return sum(self.terms.values())

    def lee_weights(self) -> dict[int, int]:
        """Number of words at each Lee weight N1 + 2 N2."""
        out: Counter = Counter()
        for (_, b, c), k in self.terms.items():
            out[b + 2 * c] += k
        return dict(sorted(out.items()))

    def min_lee_weight(self) -> int | None:
        ws = [w for w in self.lee_weights() if w > 0]
        return min(ws) if ws else None

    def to_json(self) -> dict:
        return {"n": self.n,
                "terms": [{"n0": a, "n1": b, "n2": c, "coeff": str(k)}
                          for (a, b, c), k in self.terms.items()]}

    @classmethod
    def from_json(cls, data: dict) -> "TrivariateWeightEnumerator":
        return cls(int(data["n"]), {(int(t["n0"]), int(t["n1"]), int(t["n2"])): int(t["coeff"])
                                    for t in data["terms"]})


class BivariateWeightEnumerator:
    """Hamming weight enumerator, stored as weight -> count (x^(n-w) y^w)."""

    def __init__(self, n: int, counts: dict[int, int]):
        self.n = n
        clean = {}
        for w, c in counts.items():
            if c:
                if not 0 <= w <= n:
                    raise ValueError(f"weight {w} outside 0..{n}")
                clean[int(w)] = int(c)
        self.counts = dict(sorted(clean.items()))

    def __eq__(self, other) -> bool:
        return (isinstance(other, BivariateWeightEnumerator)
                and self.n == other.n and self.counts == other.counts)

    def __repr__(self) -> str:
        return f"BivariateWeightEnumerator(n={self.n}, {self.counts})"

    def __str__(self) -> str:
        parts = []
        for w, k in self.counts.items():
            mono = "".join(f"{v}^{e}" if e > 1 else v for v, e in (("x", self.n - w), ("y", w)) if e)
            parts.append(f"{k}*{mono}" if mono else str(k))
        return " + ".join(parts) or "0"

    def evaluate(self, x=1, y=1):
        return sum(k * x ** (self.n - w) * y ** w for w, k in self.counts.items())

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def min_weight(self) -> int | None:
        ws = [w for w in self.counts if w > 0]
        return min(ws) if ws else None

    def to_json(self) -> dict:
        return {"n": self.n,
                "terms": [{"x": self.n - w, "y": w, "coeff": str(k)} for w, k in self.counts.items()]}

    @classmethod
    def from_json(cls, data: dict) -> "BivariateWeightEnumerator":
        return cls(int(data["n"]), {int(t["y"]): int(t["coeff"]) for t in data["terms"]})


def enumerator_from_json(text: str):
    data = json.loads(text)
    terms = data.get("terms", [])
    if terms and "n0" in terms[0]:
        return TrivariateWeightEnumerator.from_json(data)
    if terms and "y" in terms[0]:
        return BivariateWeightEnumerator.from_json(data)
    raise ValueError("unrecognised enumerator JSON")


def swe_of_words(words: np.ndarray, n: int) -> TrivariateWeightEnumerator:
    words = np.asarray(words, dtype=np.int64).reshape(-1, n) % 4
    n1 = np.count_nonzero(words % 2, axis=1)
    n2 = np.count_nonzero(words == 2, axis=1)
    cnt = Counter(zip((n - n1 - n2).tolist(), n1.tolist(), n2.tolist()))
    return TrivariateWeightEnumerator(n, dict(cnt))


def swe(code: QuaternaryCode, cap: int = DEFAULT_CAP) -> TrivariateWeightEnumerator:
    return swe_of_words(enumerate_codewords(code, cap), code.n)


def _times_linear(P: np.ndarray, p: int, q: int, r: int) -> np.ndarray:
    """Multiply a homogeneous poly held as P[b, c] (x exponent implied) by p x + q y + r z."""
    d = P.shape[0]
    out = np.zeros((d + 1, d + 1), dtype=object)
    out[:d, :d] += p * P
    out[1:, :d] += q * P
    out[:d, 1:] += r * P
    return out


def macwilliams_swe(e: TrivariateWeightEnumerator, size: int) -> TrivariateWeightEnumerator:
    """swe of the dual: (1/size) swe(x + 2y + z, x - z, x - 2y + z)."""
    n = e.n
    forms = ((1, 2, 1), (1, 0, -1), (1, -2, 1))
    cache: dict[tuple[int, int, int], np.ndarray] = {(0, 0, 0): np.ones((1, 1), dtype=object)}

    def expand(a: int, b: int, c: int) -> np.ndarray:
        key = (a, b, c)
        if key not in cache:
            if c:
                cache[key] = _times_linear(expand(a, b, c - 1), *forms[2])
            elif b:
                cache[key] = _times_linear(expand(a, b - 1, 0), *forms[1])
            else:
                cache[key] = _times_linear(expand(a - 1, 0, 0), *forms[0])
        return cache[key]

    acc = np.zeros((n + 1, n + 1), dtype=object)
    # building chains in sorted order keeps recursion shallow
    for (a, b, c), k in sorted(e.terms.items()):
        for j in range(1, a + 1):
            expand(j, 0, 0)
        for j in range(1, b + 1):
            expand(a, j, 0)
        acc += k * expand(a, b, c)
    terms = {}
    for b in range(n + 1):
        for c in range(n + 1 - b):
            v = int(acc[b, c])
            if v:
                q, r = divmod(v, size)
                if r or q < 0:
                    raise InvalidEnumerator("input is not a valid code enumerator")
                terms[(n - b - c, b, c)] = q
    return TrivariateWeightEnumerator(n, terms)


def hwe_from_swe(e: TrivariateWeightEnumerator) -> BivariateWeightEnumerator:
    """Substitute (x^2, xy, y^2): the Hamming enumerator of the Gray image."""
    out: Counter = Counter()
    for (_, b, c), k in e.terms.items():
        out[b + 2 * c] += k
    return BivariateWeightEnumerator(2 * e.n, dict(out))


def krawtchouk(n: int, j: int, w: int) -> int:
    """Coefficient of y^j in (x + y)^(n - w) (x - y)^w."""
    return sum((-1) ** s * comb(w, s) * comb(n - w, j - s) for s in range(min(w, j) + 1))


def binary_macwilliams(W: BivariateWeightEnumerator, size: int) -> BivariateWeightEnumerator:
    """(1/size) W(x + y, x - y)."""
    n = W.n
    out = {}
    for j in range(n + 1):
        v = sum(k * krawtchouk(n, j, w) for w, k in W.counts.items())
        if v:
            q, r = divmod(v, size)
            if r or q < 0:
                raise InvalidEnumerator("not a distance-invariant-consistent enumerator")
            out[j] = q
    return BivariateWeightEnumerator(n, out)


def hwe_direct(words, length: int | None = None) -> BivariateWeightEnumerator:
    """Weight census of explicit binary words (a BinaryCode or a 0/1 array)."""
    if hasattr(words, "codewords"):
        length = words.length
        words = words.codewords()
    words = np.asarray(words, dtype=np.uint8)
    if length is None:
        length = words.shape[1]
    w = np.count_nonzero(words.reshape(-1, length), axis=1)
    return BivariateWeightEnumerator(length, dict(Counter(w.tolist())))
