"""Brute-force reference computations, deliberately independent of the
library's row reduction, dual formula and enumerator transforms."""

import itertools

import numpy as np


def all_vectors(n, q=4):
    return np.array(list(itertools.product(range(q), repeat=n)), dtype=np.int64).reshape(-1, n)


def span_closure(rows, n):
    """Additive closure of the rows in Z4^n by breadth-first search."""
    gens = [tuple(int(x) % 4 for x in r) for r in rows]
    seen = {(0,) * n}
    frontier = [(0,) * n]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple((a + b) % 4 for a, b in zip(v, g))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def brute_dual(words, n):
    W = np.array(sorted(words), dtype=np.int64).reshape(-1, n)
    V = all_vectors(n)
    ok = np.all((V @ W.T) % 4 == 0, axis=1)
    return {tuple(int(x) for x in v) for v in V[ok]}


def sym_counts(v):
    n0 = sum(1 for x in v if x % 4 == 0)
    n2 = sum(1 for x in v if x % 4 == 2)
    return (n0, len(v) - n0 - n2, n2)


def brute_swe(words):
    out = {}
    for v in words:
        k = sym_counts(v)
        out[k] = out.get(k, 0) + 1
    return out


def lee(v):
    return sum((0, 1, 2, 1)[x % 4] for x in v)


def gray_table(v):
    """phi computed straight from the printed table."""
    beta = {0: 0, 1: 0, 2: 1, 3: 1}
    gamma = {0: 0, 1: 1, 2: 1, 3: 0}
    return tuple(beta[x % 4] for x in v) + tuple(gamma[x % 4] for x in v)


def convolve_mod4(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % 4
    while out and out[-1] == 0:
        out.pop()
    return out


def binary_order_of_x(f_bits):
    """Multiplicative order of X modulo a binary polynomial, by stepping; 0 if never 1."""
    m = len(f_bits) - 1
    f = sum(b << i for i, b in enumerate(f_bits))
    x, k = 0b10, 1
    while k <= 2 ** m:
        if x == 1:
            return k
        x <<= 1
        if x >> m & 1:
            x ^= f
        k += 1
    return 0


def poly_divides_xn1(h, n):
    """Whether h divides X^n - 1 over Z4, via schoolbook division (h monic)."""
    r = [3] + [0] * (n - 1) + [1]
    d = len(h) - 1
    for k in range(n - d, -1, -1):
        c = r[k + d]
        if c:
            for j, y in enumerate(h):
                r[k + j] = (r[k + j] - c * y) % 4
    return not any(r[:d])
