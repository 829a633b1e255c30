"""The Galois ring Z4[X]/(h(X)) for a Hensel-lifted h, with the Frobenius
automorphism and the trace down to Z4."""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .z4poly import BinPoly, Z4Poly, hensel_lift, is_primitive


class GaloisRing:
    """Z4[xi] where xi is a root of the monic Hensel lift ``h`` of degree m."""

    def __init__(self, h: Z4Poly):
        if h.lead != 1 or h.degree < 1:
            raise ValueError("h must be monic of positive degree")
        if not is_primitive(h.mod2()):
            raise ValueError("h does not reduce to a primitive polynomial")
        self.h = h
        self.m = h.degree
        self.n = (1 << self.m) - 1
        if not (Z4Poly.x_n_minus_1(self.n) % h).is_zero():
            raise ValueError("h does not divide X^n - 1")

    @classmethod
    def from_binary(cls, h2: BinPoly) -> "GaloisRing":
        return cls(hensel_lift(h2))

    def __eq__(self, other) -> bool:
        return isinstance(other, GaloisRing) and self.h == other.h

    def __hash__(self) -> int:
        return hash(self.h)

    def __repr__(self) -> str:
        return f"GaloisRing(h={self.h.to_digits()!r})"

    def element(self, coeffs) -> "GaloisRingElement":
        p = Z4Poly(coeffs) % self.h
        c = list(p.coeffs) + [0] * (self.m - len(p.coeffs))
        return GaloisRingElement(self, tuple(c))

    def scalar(self, c: int) -> "GaloisRingElement":
        return self.element([c])

    @property
    def zero(self) -> "GaloisRingElement":
        return self.scalar(0)

    @property
    def one(self) -> "GaloisRingElement":
        return self.scalar(1)

    @property
    def xi(self) -> "GaloisRingElement":
        return self.element([0, 1])

    def xi_power(self, k: int) -> "GaloisRingElement":
        return self.element(Z4Poly.monomial(k % self.n).coeffs)

    def elements(self):
        """All 4^m elements, in lexicographic order of coefficient vectors."""
        for idx in range(4 ** self.m):
            yield GaloisRingElement(self, tuple((idx >> (2 * i)) & 3 for i in range(self.m)))

    @cached_property
    def _frobenius_matrix(self) -> np.ndarray:
        # column i is the coefficient vector of xi^(2i)
        cols = [self.xi_power(2 * i).coeffs for i in range(self.m)]
        return np.array(cols, dtype=np.int64).T

    @cached_property
    def trace_of_powers(self) -> tuple[int, ...]:
        """Tr(xi^k) for k = 0..n-1."""
        return tuple(self.xi_power(k).trace() for k in range(self.n))


class GaloisRingElement:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: GaloisRing, coeffs: tuple[int, ...]):
        if len(coeffs) != ring.m or any(c not in (0, 1, 2, 3) for c in coeffs):
            raise ValueError("element needs exactly m coefficients in Z4")
        self.ring = ring
        self.coeffs = tuple(coeffs)

    def _check(self, other: "GaloisRingElement") -> None:
        if self.ring != other.ring:
            raise ValueError("incompatible rings")

    def __add__(self, other: "GaloisRingElement") -> "GaloisRingElement":
        self._check(other)
        return GaloisRingElement(self.ring, tuple((a + b) % 4 for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "GaloisRingElement":
        return GaloisRingElement(self.ring, tuple(-a % 4 for a in self.coeffs))

    def __sub__(self, other: "GaloisRingElement") -> "GaloisRingElement":
        return self + (-other)

    def __mul__(self, other: "GaloisRingElement | int") -> "GaloisRingElement":
        if isinstance(other, int):
            return GaloisRingElement(self.ring, tuple(a * other % 4 for a in self.coeffs))
        self._check(other)
        return self.ring.element((Z4Poly(self.coeffs) * Z4Poly(other.coeffs)).coeffs)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "GaloisRingElement":
        r, b = self.ring.one, self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def __eq__(self, other) -> bool:
        return isinstance(other, GaloisRingElement) and self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring.h, self.coeffs))

    def __repr__(self) -> str:
        return f"GaloisRingElement({''.join(map(str, self.coeffs))})"

    def frobenius(self) -> "GaloisRingElement":
        """The Z4-linear map sending xi^i to xi^(2i)."""
        v = (self.ring._frobenius_matrix @ np.array(self.coeffs, dtype=np.int64)) % 4
        return GaloisRingElement(self.ring, tuple(int(x) for x in v))

    def trace(self) -> int:
        """Sum of the m Frobenius conjugates, which must land in Z4."""
        acc, a = self.ring.zero, self
        for _ in range(self.ring.m):
            acc = acc + a
            a = a.frobenius()
        if any(acc.coeffs[1:]):
            raise ArithmeticError(f"trace left Z4: {acc!r}")
        return acc.coeffs[0]


def gr_arith(a: GaloisRingElement, b: GaloisRingElement, op: str) -> GaloisRingElement:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def frobenius(a: GaloisRingElement) -> GaloisRingElement:
    return a.frobenius()


def trace(a: GaloisRingElement) -> int:
    return a.trace()


def kerdock_via_trace(ring: GaloisRing) -> np.ndarray:
    """Words (eps, eps + Tr(lam xi^0), ..., eps + Tr(lam xi^(n-1))) for all
    lam in the ring and eps in Z4, as a (4^(m+1), 2^m) uint8 array.

    Row order: lam runs over :meth:`GaloisRing.elements`, eps fastest.
    """
    m, n = ring.m, ring.n
    tr = ring.trace_of_powers
    # Tr(lam xi^t) = sum_i lam_i Tr(xi^(i+t)) by Z4-linearity
    T = np.array([[tr[(i + t) % n] for t in range(n)] for i in range(m)], dtype=np.int64)
    lams = np.array([e.coeffs for e in ring.elements()], dtype=np.int64).reshape(-1, m)
    body = (lams @ T) % 4
    eps = np.arange(4)
    words = np.empty((len(lams), 4, n + 1), dtype=np.int64)
    words[:, :, 0] = eps[None, :]
    words[:, :, 1:] = (body[:, None, :] + eps[None, :, None]) % 4
    return words.reshape(-1, n + 1).astype(np.uint8)
