"""Linear codes over Z4: generator matrices, row reduction, duals,
membership, enumeration and bounded low Lee weight search."""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from math import comb

import numpy as np

from .z4poly import Z4Poly

DEFAULT_CAP = 1 << 24

# Lee weight of 0, 1, 2, 3
LEE = np.array([0, 1, 2, 1], dtype=np.int64)


class CodeTooLarge(ValueError):
    pass


def _as_matrix(rows, n=None) -> np.ndarray:
    a = np.array(rows, dtype=np.int64)
    if a.size == 0 and not (a.ndim == 2 and a.shape[1]):
        if n is None:
            raise ValueError("cannot infer length of an empty generator list")
        a = np.zeros((0, n), dtype=np.int64)
    if a.ndim != 2:
        raise ValueError("generator rows must form a matrix")
    return a % 4


def row_reduce(rows, n=None):
    """Reduce generator rows over Z4.

    Returns ``(unit_rows, two_rows, unit_pivots, two_pivots)``. Unit rows
    have a 1 at their pivot and 0 in every other unit-pivot column. Two rows
    are even, have 2 at their pivot, and vanish on all other pivot columns.
    The reduced rows span the same subgroup as the input.
    """
    G = _as_matrix(rows, n).copy()
    k, n = G.shape
    unit_pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == k:
            break
        hits = np.nonzero(G[r:, c] % 2)[0]
        if not len(hits):
            continue
        p = r + hits[0]
        G[[r, p]] = G[[p, r]]
        G[r] = (G[r] * G[r, c]) % 4  # 1 and 3 are self-inverse
        others = np.arange(k) != r
        G[others] = (G[others] - np.outer(G[others, c], G[r])) % 4
        unit_pivots.append(c)
        r += 1
    units = G[:r]
    # what remains is even: eliminate over GF(2) on the halves
    B = (G[r:] // 2) % 2
    two_pivots: list[int] = []
    t = 0
    for c in range(n):
        if t == len(B):
            break
        hits = np.nonzero(B[t:, c])[0]
        if not len(hits):
            continue
        p = t + hits[0]
        B[[t, p]] = B[[p, t]]
        others = np.nonzero(B[:, c])[0]
        others = others[others != t]
        B[others] ^= B[t]
        two_pivots.append(c)
        t += 1
    twos = 2 * B[:t]
    # clear the even part of unit rows in two-pivot columns
    for i, c in enumerate(two_pivots):
        sel = units[:, c] >= 2
        units[sel] = (units[sel] - twos[i]) % 4
    return units, twos, unit_pivots, two_pivots


class QuaternaryCode:
    """Additive subgroup of Z4^n given by generator rows."""

    def __init__(self, rows, n: int | None = None):
        G = _as_matrix(rows, n)
        self.n = G.shape[1]
        self.rows = G
        units, twos, up, tp = row_reduce(G)
        self.unit_rows = units
        self.two_rows = twos
        self.unit_pivots = tuple(up)
        self.two_pivots = tuple(tp)
        self.unit_rows.setflags(write=False)
        self.two_rows.setflags(write=False)
        self.rows.setflags(write=False)

    @property
    def k1(self) -> int:
        return len(self.unit_pivots)

    @property
    def k2(self) -> int:
        return len(self.two_pivots)

    @property
    def size(self) -> int:
        return 4 ** self.k1 * 2 ** self.k2

    @property
    def reduced(self) -> np.ndarray:
        return np.vstack([self.unit_rows, self.two_rows]).astype(np.int64)

    def __len__(self) -> int:
        return self.size

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __repr__(self) -> str:
        return f"QuaternaryCode(n={self.n}, k1={self.k1}, k2={self.k2})"

    @classmethod
    def zero(cls, n: int) -> "QuaternaryCode":
        return cls(np.zeros((0, n), dtype=np.int64), n)

    @classmethod
    def full(cls, n: int) -> "QuaternaryCode":
        return cls(np.eye(n, dtype=np.int64))


def cyclic_code(g: Z4Poly, n: int) -> QuaternaryCode:
    """Code spanned by g, Xg, ..., X^(n-1-deg g) g, coefficient i at position i."""
    if g.is_zero():
        return QuaternaryCode.zero(n)
    d = g.degree
    if d >= n:
        raise ValueError("generator too long")
    rows = np.zeros((n - d, n), dtype=np.int64)
    for s in range(n - d):
        rows[s, s:s + d + 1] = g.coeffs
    return QuaternaryCode(rows, n)


def extend_parity(code: QuaternaryCode) -> QuaternaryCode:
    """Append an overall parity coordinate (minus the coordinate sum)."""
    G = code.rows
    col = (-G.sum(axis=1)) % 4
    return QuaternaryCode(np.hstack([G, col[:, None]]), code.n + 1)


def dual(code: QuaternaryCode) -> QuaternaryCode:
    """Dual under the Z4 inner product.

    Permuting columns to (unit pivots, two pivots, rest) puts the reduced
    generators in the form [[I, A, B], [0, 2I, 2C]]; the dual is then
    generated by [[-(B + AC)^T, C^T, I], [2A^T, 2I, 0]].
    """
    n = code.n
    up, tp = list(code.unit_pivots), list(code.two_pivots)
    rest = [c for c in range(n) if c not in set(up) | set(tp)]
    k1, k2, r = len(up), len(tp), len(rest)
    U, T = code.unit_rows, code.two_rows
    A = U[:, tp]
    B = U[:, rest]
    C = (T[:, rest] // 2) % 2
    H1 = np.zeros((r, n), dtype=np.int64)
    H1[:, up] = (-(B + A @ C)).T
    H1[:, tp] = C.T
    H1[:, rest] = np.eye(r, dtype=np.int64)
    H2 = np.zeros((k2, n), dtype=np.int64)
    H2[:, up] = 2 * A.T
    H2[:, tp] = 2 * np.eye(k2, dtype=np.int64)
    return QuaternaryCode(np.vstack([H1, H2]) % 4, n)


def _reduce_vector(code: QuaternaryCode, v) -> np.ndarray:
    v = np.asarray(v, dtype=np.int64) % 4
    if v.shape != (code.n,):
        raise ValueError(f"length mismatch: expected {code.n}, got {v.shape}")
    v = v.copy()
    for row, c in zip(code.unit_rows, code.unit_pivots):
        if v[c]:
            v = (v - v[c] * row) % 4
    if np.any(v % 2):
        return v
    for row, c in zip(code.two_rows, code.two_pivots):
        if v[c]:
            v = (v - row) % 4
    return v


def contains(code: QuaternaryCode, v) -> bool:
    """Membership by reducing v against the reduced rows."""
    return not np.any(_reduce_vector(code, v))


def enumerate_codewords(code: QuaternaryCode, cap: int = DEFAULT_CAP) -> np.ndarray:
    """All codewords as a (|D|, n) uint8 array, each exactly once."""
    if code.size > cap:
        raise CodeTooLarge(f"code too large to enumerate ({code.size} > cap {cap})")
    k1, k2 = code.k1, code.k2
    digits = [np.arange(4)] * k1 + [np.arange(2)] * k2
    if digits:
        grids = np.meshgrid(*digits, indexing="ij")
        coeffs = np.stack([g.ravel() for g in grids], axis=1)
    else:
        coeffs = np.zeros((1, 0), dtype=np.int64)
    G = code.reduced
    return ((coeffs @ G) % 4).astype(np.uint8)


def iter_codewords(code: QuaternaryCode, cap: int = DEFAULT_CAP):
    """Generator form of :func:`enumerate_codewords`."""
    for row in enumerate_codewords(code, cap):
        yield tuple(int(x) for x in row)


def equal_as_sets(a: QuaternaryCode, b: QuaternaryCode) -> bool:
    if a.n != b.n:
        raise ValueError("length mismatch")
    return a.size == b.size and all(contains(b, r) for r in a.reduced)


def lee_weight(v) -> int:
    return int(LEE[np.asarray(v, dtype=np.int64) % 4].sum())


def _patterns(s: int, twos: int) -> np.ndarray:
    """Value patterns on a support of size s with exactly `twos` entries equal to 2
    and the rest in {1, 3}."""
    out = []
    for pos in itertools.combinations(range(s), twos):
        rest = [i for i in range(s) if i not in pos]
        for signs in itertools.product((1, 3), repeat=len(rest)):
            p = [2] * s
            for i, x in zip(rest, signs):
                p[i] = x
            out.append(p)
    return np.array(out, dtype=np.int64).reshape(-1, s)


_CHECKS_PER_WORD = 12


def _syndrome_tables(H: np.ndarray):
    """Pack the syndrome contribution of value x at coordinate j into int64
    words, 5 bits per check so sums of up to 7 terms never overflow a field.

    Returns (tables, masks) with one (4, n) table per group of 12 checks.
    """
    r, n = H.shape
    tables, masks = [], []
    for g in range(0, max(r, 1), _CHECKS_PER_WORD):
        Hg = H[g:g + _CHECKS_PER_WORD]
        shifts = 5 * np.arange(len(Hg), dtype=np.int64)
        table = np.zeros((4, n), dtype=np.int64)
        for x in range(4):
            table[x] = (((x * Hg) % 4) << shifts[:, None]).sum(axis=0)
        tables.append(table)
        masks.append(int((3 << shifts).sum()) if len(Hg) else 0)
    return tables, masks


def lee_weight_counts(code: QuaternaryCode, w_max: int, workers: int = 1,
                      stop_at_first: bool = False) -> dict[int, int]:
    """Count codewords of each Lee weight 1..w_max by exhaustive search.

    Every vector of Lee weight <= w_max is tested against the dual's
    generators (the syndrome must vanish). With ``stop_at_first`` the search
    halts after the first weight that has codewords.
    """
    if w_max > 7:
        raise ValueError("w_max above 7 not supported by the packed syndrome search")
    H = dual(code).reduced
    n = code.n
    tables, masks = _syndrome_tables(H)
    counts: dict[int, int] = {}
    for w in range(1, w_max + 1):
        total = 0
        for s in range((w + 1) // 2, min(w, n) + 1):
            twos = w - s
            pats = _patterns(s, twos)
            supports = np.array(list(itertools.combinations(range(n), s)),
                                dtype=np.int64).reshape(-1, s)
            chunks = np.array_split(supports, max(1, workers * 4)) if len(supports) else []

            def count_chunk(sup):
                c = 0
                for p in pats:
                    hit = np.ones(len(sup), dtype=bool)
                    for table, mask in zip(tables, masks):
                        syn = np.zeros(len(sup), dtype=np.int64)
                        for j in range(s):
                            syn += table[p[j]][sup[:, j]]
                        hit &= (syn & mask) == 0
                    c += int(np.count_nonzero(hit))
                return c

            if workers > 1 and len(chunks) > 1:
                with ThreadPoolExecutor(workers) as ex:
                    total += sum(ex.map(count_chunk, chunks))
            else:
                total += sum(count_chunk(ch) for ch in chunks)
        if total:
            counts[w] = total
            if stop_at_first:
                break
    return counts


def count_low_weight_vectors(n: int, w_max: int) -> int:
    """Number of vectors in Z4^n of Lee weight 1..w_max (search budget)."""
    total = 0
    for w in range(1, w_max + 1):
        for s in range((w + 1) // 2, min(w, n) + 1):
            total += comb(n, s) * comb(s, w - s) * 2 ** (2 * s - w)
    return total


def min_lee_weight_search(code: QuaternaryCode, w_max: int, workers: int = 1) -> int | None:
    """Smallest nonzero Lee weight <= w_max among codewords, or None."""
    counts = lee_weight_counts(code, w_max, workers=workers, stop_at_first=True)
    return min(counts) if counts else None


def write_code(code: QuaternaryCode, path) -> None:
    with open(path, "w") as f:
        f.write(format_code(code))


def format_code(code: QuaternaryCode) -> str:
    lines = [f"Z4 {code.n} {len(code.rows)}"]
    lines += ["".join(str(int(x)) for x in row) for row in code.rows]
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> QuaternaryCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty code file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "Z4":
        raise ValueError(f"bad Z4 code header: {lines[0]!r}")
    n, k = int(head[1]), int(head[2])
    body = lines[1:]
    if len(body) != k:
        raise ValueError(f"expected {k} rows, found {len(body)}")
    rows = []
    for ln in body:
        if len(ln) != n or any(ch not in "0123" for ch in ln):
            raise ValueError(f"bad Z4 row: {ln!r}")
        rows.append([int(ch) for ch in ln])
    return QuaternaryCode(np.array(rows, dtype=np.int64).reshape(k, n), n)


def read_code(path) -> QuaternaryCode:
    with open(path) as f:
        return parse_code(f.read())
