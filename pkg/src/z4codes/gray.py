"""Gray map from Z4^n to GF(2)^(2n), binary codes, and the Z4-linearity
criteria for Gray images and for binary linear codes."""

from __future__ import annotations

import itertools
from math import comb

import numpy as np

from .codes import DEFAULT_CAP, CodeTooLarge, QuaternaryCode, contains, enumerate_codewords

# table for i = 0, 1, 2, 3
ALPHA = np.array([0, 1, 0, 1], dtype=np.uint8)
BETA = np.array([0, 0, 1, 1], dtype=np.uint8)
GAMMA = np.array([0, 1, 1, 0], dtype=np.uint8)


def component_maps(a):
    """Entrywise (alpha(a), beta(a), gamma(a))."""
    a = np.asarray(a, dtype=np.int64) % 4
    return ALPHA[a], BETA[a], GAMMA[a]


def gray_map(a) -> np.ndarray:
    """phi(a) = (beta(a), gamma(a)); works row-wise on 2-D input."""
    a = np.asarray(a, dtype=np.int64) % 4
    return np.concatenate([BETA[a], GAMMA[a]], axis=-1)


def gray_inverse(b) -> np.ndarray:
    b = np.asarray(b, dtype=np.int64)
    n = b.shape[-1] // 2
    beta, gamma = b[..., :n], b[..., n:]
    return (beta ^ gamma) + 2 * beta


def hamming_distance(u, v) -> int:
    return int(np.count_nonzero(np.asarray(u) != np.asarray(v)))


# GF(2) linear algebra on uint8 0/1 matrices

def gf2_rref(M) -> tuple[np.ndarray, list[int]]:
    A = np.array(M, dtype=np.uint8) & 1
    if A.ndim == 1:
        A = A[None, :]
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hits = np.nonzero(A[r:, c])[0]
        if not len(hits):
            continue
        p = r + hits[0]
        if p != r:
            A[[r, p]] = A[[p, r]]
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        A[others] ^= A[r]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def gf2_nullspace(basis: np.ndarray, n: int) -> np.ndarray:
    """Rows spanning {x : basis @ x = 0} (a parity-check matrix)."""
    R, piv = gf2_rref(basis) if len(basis) else (np.zeros((0, n), np.uint8), [])
    free = [c for c in range(n) if c not in set(piv)]
    H = np.zeros((len(free), n), dtype=np.uint8)
    for i, f in enumerate(free):
        H[i, f] = 1
        for r, p in enumerate(piv):
            H[i, p] = R[r, f]
    return H


class BinaryCode:
    """A binary code, either an explicit word set (possibly nonlinear) or a
    linear code held as a row-reduced basis."""

    def __init__(self, words, length: int, linear: bool = False):
        W = np.array(words, dtype=np.uint8).reshape(-1, length) & 1
        self.length = length
        self.linear = linear
        if linear:
            W, _ = gf2_rref(W) if len(W) else (W, [])
        else:
            W = np.unique(W, axis=0)
        W.setflags(write=False)
        self.words = W

    @classmethod
    def explicit(cls, words, length: int) -> "BinaryCode":
        return cls(words, length, linear=False)

    @classmethod
    def from_basis(cls, basis, length: int) -> "BinaryCode":
        return cls(basis, length, linear=True)

    @property
    def kind(self) -> str:
        return "linear" if self.linear else "explicit"

    @property
    def dimension(self) -> int:
        if not self.linear:
            raise ValueError("dimension is only defined for linear codes")
        return len(self.words)

    @property
    def size(self) -> int:
        return 2 ** len(self.words) if self.linear else len(self.words)

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"BinaryCode(length={self.length}, {self.kind}, size={self.size})"

    def parity_check(self) -> np.ndarray:
        if not self.linear:
            raise ValueError("parity check needs a linear code")
        return gf2_nullspace(self.words, self.length)

    def contains(self, v) -> bool:
        v = np.asarray(v, dtype=np.uint8) & 1
        if self.linear:
            return not np.any((self.parity_check().astype(np.int64) @ v) % 2)
        return bool(np.any(np.all(self.words == v, axis=1)))

    def codewords(self, cap: int = DEFAULT_CAP) -> np.ndarray:
        if self.size > cap:
            raise CodeTooLarge(f"code too large to enumerate ({self.size} > cap {cap})")
        if not self.linear:
            return self.words
        k = len(self.words)
        coeffs = ((np.arange(2 ** k)[:, None] >> np.arange(k)) & 1).astype(np.int64)
        return ((coeffs @ self.words.astype(np.int64)) % 2).astype(np.uint8)

    def equal_as_sets(self, other: "BinaryCode", cap: int = DEFAULT_CAP) -> bool:
        if self.length != other.length or self.size != other.size:
            return False
        a = np.unique(self.codewords(cap), axis=0)
        b = np.unique(other.codewords(cap), axis=0)
        return bool(np.array_equal(a, b))


class GrayImage:
    """Lazy handle on phi(D) for codes too large to list."""

    def __init__(self, code: QuaternaryCode):
        self.code = code
        self.length = 2 * code.n

    @property
    def size(self) -> int:
        return self.code.size

    def __repr__(self) -> str:
        return f"GrayImage(length={self.length}, size={self.size})"

    def codewords(self, cap: int = DEFAULT_CAP) -> np.ndarray:
        return gray_image(self.code, cap).words

    def linear_span(self) -> BinaryCode:
        return gray_image_linear_span(self.code)


def gray_image(code: QuaternaryCode, cap: int = DEFAULT_CAP) -> BinaryCode:
    words = gray_map(enumerate_codewords(code, cap))
    return BinaryCode.explicit(words, 2 * code.n)


def _double_products(code: QuaternaryCode) -> list[tuple[int, int, np.ndarray]]:
    al = ALPHA[code.reduced % 4]
    return [(i, j, al[i] & al[j]) for i in range(len(al)) for j in range(i, len(al))]


def image_is_linear(code: QuaternaryCode, exhaustive: bool = False) -> bool:
    """Whether phi(D) is linear: 2 alpha(a)*alpha(b) must lie in D.

    The map (a, b) -> 2 alpha(a)*alpha(b) is biadditive, so generator pairs
    suffice. ``exhaustive=True`` checks every codeword pair instead.
    """
    if exhaustive:
        if code.size > 1 << 12:
            raise CodeTooLarge("exhaustive check limited to 4096 codewords")
        words = enumerate_codewords(code).astype(np.int64)
        al = ALPHA[words]
        return all(contains(code, 2 * (al[i] & al[j]))
                   for i in range(len(al)) for j in range(i, len(al)))
    return all(contains(code, 2 * p.astype(np.int64)) for _, _, p in _double_products(code))


def swap(u) -> np.ndarray:
    u = np.asarray(u)
    h = u.shape[-1] // 2
    return np.concatenate([u[..., h:], u[..., :h]], axis=-1)


def swap_condition_holds(C: BinaryCode) -> bool:
    """Check (u + s(u)) * (v + s(v)) in C over basis pairs, coordinates as given.

    Bilinear over GF(2), so basis pairs suffice. No permutation search.
    """
    if not C.linear:
        raise ValueError("swap condition needs a linear code")
    if C.length % 2:
        raise ValueError("odd length")
    B = C.words
    D = B ^ swap(B)
    i, j = np.triu_indices(len(D))
    prods = (D[i] & D[j]).astype(np.int64)
    H = C.parity_check().astype(np.int64)
    return not np.any((prods @ H.T) % 2)


def reed_muller(r: int, m: int) -> BinaryCode:
    """RM(r, m) spanned by evaluations of monomials of degree <= r.

    Coordinate t is the point whose variable x_i is bit i of t, so x_(m-1)
    separates the left and right halves.
    """
    if not 0 <= r <= m:
        raise ValueError("order out of range")
    t = np.arange(1 << m)
    x = (t[None, :] >> np.arange(m)[:, None]) & 1
    rows = []
    for d in range(r + 1):
        for mono in itertools.combinations(range(m), d):
            v = np.ones(1 << m, dtype=np.uint8)
            for i in mono:
                v &= x[i].astype(np.uint8)
            rows.append(v)
    return BinaryCode.from_basis(rows, 1 << m)


def reed_muller_dimension(r: int, m: int) -> int:
    return sum(comb(m, i) for i in range(r + 1))


def gray_image_linear_span(code: QuaternaryCode) -> BinaryCode:
    """Binary span of phi(D) without listing phi(D).

    phi(a + b) = phi(a) + phi(b) + (alpha(a)*alpha(b), alpha(a)*alpha(b)), so
    the span is generated by phi(g_i) and the doubled products over i <= j.
    """
    G = code.reduced
    gens = [gray_map(G)] if len(G) else []
    prods = [np.concatenate([p, p]) for _, _, p in _double_products(code)]
    if prods:
        gens.append(np.array(prods, dtype=np.uint8))
    W = np.vstack(gens) if gens else np.zeros((0, 2 * code.n), dtype=np.uint8)
    return BinaryCode.from_basis(W, 2 * code.n)


def _pack(words: np.ndarray) -> np.ndarray:
    """Pack 0/1 rows into uint64 words for XOR/popcount distance work."""
    b = np.packbits(words.astype(np.uint8), axis=1)
    pad = (-b.shape[1]) % 8
    if pad:
        b = np.pad(b, ((0, 0), (0, pad)))
    return b.view(np.uint64)


def _distance_rows(P: np.ndarray, lo: int, hi: int) -> np.ndarray:
    return np.bitwise_count(P[lo:hi, None, :] ^ P[None, :, :]).sum(axis=2, dtype=np.int64)


def _chunk(n_words: int, n_limbs: int) -> int:
    return max(1, (1 << 22) // max(1, n_words * n_limbs))


def min_distance_binary(C: BinaryCode, cap: int = DEFAULT_CAP, limit: int = 4) -> int | None:
    """Exact minimum distance.

    Explicit codes: minimum over all pairs of distinct words. Linear codes
    with at most ``cap`` words: least nonzero weight by enumeration. Larger
    linear codes: smallest w <= ``limit`` with a weight-w word in the code,
    tested through column syndromes; ``None`` means the distance exceeds
    ``limit``.
    """
    if C.linear:
        if C.dimension == 0:
            raise ValueError("zero code has no minimum distance")
        if C.size <= cap:
            w = np.count_nonzero(C.codewords(cap), axis=1)
            return int(w[w > 0].min())
        return _min_weight_linear(C, limit)
    if C.size > cap:
        raise CodeTooLarge(f"code too large ({C.size} > cap {cap})")
    if C.size < 2:
        raise ValueError("minimum distance needs at least two words")
    P = _pack(C.words)
    best = C.length + 1
    step = _chunk(len(P), P.shape[1])
    for lo in range(0, len(P), step):
        hi = min(lo + step, len(P))
        d = _distance_rows(P, lo, hi)
        d[np.arange(hi - lo), np.arange(lo, hi)] = C.length + 1
        best = min(best, int(d.min()))
    return best


def _min_weight_linear(C: BinaryCode, limit: int) -> int | None:
    H = C.parity_check()
    syn = [int("".join(map(str, col)) or "0", 2) for col in H.T]
    for w in range(1, limit + 1):
        for combo in itertools.combinations(range(C.length), w):
            acc = 0
            for j in combo:
                acc ^= syn[j]
            if acc == 0:
                return w
    return None


def is_distance_invariant(C: BinaryCode, cap: int = 1 << 13) -> bool:
    """Every word sees the same distance distribution as the first word."""
    W = C.codewords(cap)
    if len(W) > cap:
        raise CodeTooLarge(f"code too large ({len(W)} > cap {cap})")
    P = _pack(W)
    L = C.length
    ref = None
    step = _chunk(len(P), P.shape[1])
    for lo in range(0, len(P), step):
        hi = min(lo + step, len(P))
        d = _distance_rows(P, lo, hi)
        hist = np.apply_along_axis(np.bincount, 1, d, minlength=L + 1)
        if ref is None:
            ref = hist[0]
        if not np.all(hist == ref):
            return False
    return True


def format_binary_code(C: BinaryCode) -> str:
    lines = [f"F2 {C.length} {len(C.words)} {C.kind}"]
    lines += ["".join(str(int(b)) for b in row) for row in C.words]
    return "\n".join(lines) + "\n"


def parse_binary_code(text: str) -> BinaryCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty code file")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "F2" or head[3] not in ("explicit", "linear"):
        raise ValueError(f"bad F2 code header: {lines[0]!r}")
    n, k = int(head[1]), int(head[2])
    body = lines[1:]
    if len(body) != k:
        raise ValueError(f"expected {k} rows, found {len(body)}")
    for ln in body:
        if len(ln) != n or any(ch not in "01" for ch in ln):
            raise ValueError(f"bad binary row: {ln!r}")
    W = np.array([[int(ch) for ch in ln] for ln in body], dtype=np.uint8).reshape(k, n)
    return BinaryCode(W, n, linear=head[3] == "linear")
