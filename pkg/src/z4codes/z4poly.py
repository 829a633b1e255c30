"""Polynomials over Z4 and over GF(2), and the Hensel lift of a primitive
binary polynomial to Z4.

Coefficients are stored lowest degree first everywhere, so the digit
string "323001" is 3 + 2X + 3X^2 + X^5.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def _trim(coeffs: Iterable[int], modulus: int) -> tuple[int, ...]:
    c = [int(x) % modulus for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Z4Poly:
    """Polynomial with coefficients in Z4, ``coeffs[i]`` is the coefficient of X^i."""

    coeffs: tuple[int, ...] = ()

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs, 4))

    @classmethod
    def from_digits(cls, s: str) -> "Z4Poly":
        s = s.strip()
        if not s or any(ch not in "0123" for ch in s):
            raise ValueError(f"bad Z4 digit string: {s!r}")
        return cls(int(ch) for ch in s)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Z4Poly":
        return cls([0] * k + [c])

    @classmethod
    def x_n_minus_1(cls, n: int) -> "Z4Poly":
        # -1 == 3 in Z4
        return cls([3] + [0] * (n - 1) + [1])

    def to_digits(self) -> str:
        return "".join(str(c) for c in self.coeffs) or "0"

    @property
    def degree(self) -> int:
        """Degree, with -1 standing in for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "Z4Poly") -> "Z4Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Z4Poly(self[i] + other[i] for i in range(n))

    def __neg__(self) -> "Z4Poly":
        return Z4Poly(-c for c in self.coeffs)

    def __sub__(self, other: "Z4Poly") -> "Z4Poly":
        return self + (-other)

    def __mul__(self, other: "Z4Poly | int") -> "Z4Poly":
        if isinstance(other, int):
            return Z4Poly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Z4Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Z4Poly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Z4Poly") -> tuple["Z4Poly", "Z4Poly"]:
        if other.lead not in (1, 3):
            raise ValueError("non-unit leading coefficient")
        inv = other.lead  # 1 and 3 are self-inverse mod 4
        r = list(self.coeffs)
        db = other.degree
        if len(r) - 1 < db:
            return Z4Poly(), self
        q = [0] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            c = (r[k + db] * inv) % 4
            q[k] = c
            if c:
                for j, y in enumerate(other.coeffs):
                    r[k + j] = (r[k + j] - c * y) % 4
        return Z4Poly(q), Z4Poly(r[:db])

    def __floordiv__(self, other: "Z4Poly") -> "Z4Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Z4Poly") -> "Z4Poly":
        return divmod(self, other)[1]

    def mod2(self) -> "BinPoly":
        return BinPoly(c & 1 for c in self.coeffs)

    def __repr__(self) -> str:
        return f"Z4Poly({self.to_digits()!r})"


@dataclass(frozen=True)
class BinPoly:
    """Polynomial over GF(2), lowest coefficient first."""

    coeffs: tuple[int, ...] = ()

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs, 2))

    @classmethod
    def from_digits(cls, s: str) -> "BinPoly":
        s = s.strip()
        if not s or any(ch not in "01" for ch in s):
            raise ValueError(f"bad binary digit string: {s!r}")
        return cls(int(ch) for ch in s)

    @classmethod
    def from_int(cls, v: int) -> "BinPoly":
        return cls(int(b) for b in reversed(bin(v)[2:])) if v else cls()

    def to_int(self) -> int:
        return sum(c << i for i, c in enumerate(self.coeffs))

    def to_digits(self) -> str:
        return "".join(map(str, self.coeffs)) or "0"

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lift(self) -> Z4Poly:
        """The same 0/1 coefficients read in Z4 (not the Hensel lift)."""
        return Z4Poly(self.coeffs)

    def __repr__(self) -> str:
        return f"BinPoly({self.to_digits()!r})"


# GF(2)[X] arithmetic on int bitmasks (bit i = coefficient of X^i)

def _gf2_mulmod(a: int, b: int, f: int) -> int:
    df = f.bit_length() - 1
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> df) & 1:
            a ^= f
    return r


def _gf2_powmod(a: int, e: int, f: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = _gf2_mulmod(r, a, f)
        a = _gf2_mulmod(a, a, f)
        e >>= 1
    return r


def _gf2_mod(a: int, f: int) -> int:
    df = f.bit_length() - 1
    while a and a.bit_length() - 1 >= df:
        a ^= f << (a.bit_length() - 1 - df)
    return a


def _gf2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _gf2_mod(a, b)
    return a


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(h2: BinPoly) -> bool:
    """Rabin's test over GF(2)."""
    m = h2.degree
    if m < 1:
        return False
    f = h2.to_int()
    x = 0b10
    if _gf2_powmod(x, 1 << m, f) != _gf2_mod(x, f):
        return False
    for q in _prime_factors(m):
        t = _gf2_powmod(x, 1 << (m // q), f) ^ _gf2_mod(x, f)
        if _gf2_gcd(f, t) != 1:
            return False
    return True


def is_primitive(h2: BinPoly) -> bool:
    """True iff ``h2`` is irreducible and X has order 2^m - 1 modulo it."""
    m = h2.degree
    if m < 1 or not is_irreducible(h2):
        return False
    f = h2.to_int()
    n = (1 << m) - 1
    if _gf2_powmod(0b10, n, f) != 1:
        return False
    return all(_gf2_powmod(0b10, n // p, f) != 1 for p in _prime_factors(n))


def primitive_polynomials(m: int) -> list[BinPoly]:
    """All primitive polynomials of degree m, ordered by integer value."""
    return [BinPoly.from_int(v) for v in range(1 << m, 1 << (m + 1))
            if v & 1 and is_primitive(BinPoly.from_int(v))]


# X^3+X^2+1 and X^5+X^2+1 reproduce the published octacode and m=5 lifts
_DEFAULT_PRIMITIVE = {3: "1011", 5: "101001"}


def default_primitive(m: int) -> BinPoly:
    """Default primitive polynomial of degree m.

    Pinned for m = 3 and m = 5 to X^3+X^2+1 and X^5+X^2+1; otherwise the
    primitive polynomial of least integer value.
    """
    if m in _DEFAULT_PRIMITIVE:
        return BinPoly.from_digits(_DEFAULT_PRIMITIVE[m])
    if m < 1:
        raise ValueError("degree must be positive")
    for v in range(1 << m, 1 << (m + 1)):
        p = BinPoly.from_int(v)
        if v & 1 and is_primitive(p):
            return p
    raise ValueError(f"no primitive polynomial of degree {m}")  # pragma: no cover


def hensel_lift(h2: BinPoly) -> Z4Poly:
    """Lift a primitive binary polynomial to the monic divisor of X^n - 1 over Z4.

    Uses one Graeffe root-squaring step: writing h2(X) = e(X^2) + X d(X^2),
    the lift satisfies h(Y) = +-(e(Y)^2 - Y d(Y)^2) mod 4.
    """
    if h2.degree < 2 or not is_primitive(h2):
        raise ValueError("not primitive")
    c = h2.coeffs
    e = Z4Poly(c[0::2])
    d = Z4Poly(c[1::2])
    h = e * e - Z4Poly.monomial(1) * (d * d)
    if h.lead == 3:
        h = -h
    return h


def reciprocal(p: Z4Poly) -> Z4Poly:
    """X^deg(p) p(1/X): the coefficient sequence reversed."""
    if p.is_zero() or p[0] == 0:
        raise ValueError("reciprocal undefined")
    return Z4Poly(reversed(p.coeffs))


def generator_poly_g(h: Z4Poly, m: int) -> Z4Poly:
    """Reciprocal of (X^n - 1) / ((X - 1) h(X)) with n = 2^m - 1."""
    n = (1 << m) - 1
    q, r = divmod(Z4Poly.x_n_minus_1(n), Z4Poly([3, 1]) * h)
    if not r.is_zero():
        raise ValueError("h does not divide X^n - 1")
    return reciprocal(q)


def poly_arith(a: Z4Poly, b: Z4Poly, op: str):
    """Dispatch helper: op in {add, sub, mul, mod, divmod}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "mod":
        return a % b
    if op == "divmod":
        return divmod(a, b)
    raise ValueError(f"unknown op {op!r}")


def as_z4poly(p: "Z4Poly | str | Sequence[int]") -> Z4Poly:
    if isinstance(p, Z4Poly):
        return p
    if isinstance(p, str):
        return Z4Poly.from_digits(p)
    return Z4Poly(p)


def as_binpoly(p: "BinPoly | str | Sequence[int]") -> BinPoly:
    if isinstance(p, BinPoly):
        return p
    if isinstance(p, str):
        return BinPoly.from_digits(p)
    return BinPoly(p)
