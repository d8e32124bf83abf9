"""Arithmetic tables for small finite fields GF(p^m).

Field elements are the integers 0..q-1.  An element a stands for the
polynomial sum(a_i * x^i) over GF(p), where a_0, a_1, ... are the base-p
digits of a (least significant first).  Addition is therefore digit-wise
mod p, and multiplication reduces modulo a fixed monic irreducible
polynomial.

The reducing polynomial is the lexicographically smallest monic
irreducible of degree m over GF(p) (smallest when read as the tuple of
non-leading coefficients, constant term last).  For the fields used most
this gives the conventional choices:

    GF(4):  x^2 + x + 1
    GF(8):  x^3 + x + 1
    GF(9):  x^2 + 1

Tables are cached per field so all callers share one instance.
"""
from __future__ import annotations

from functools import lru_cache


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, m) with q = p^m and p prime, or None."""
    if q < 2:
        return None
    p = 2
    while p * p <= q:
        if q % p == 0:
            m = 0
            r = q
            while r % p == 0:
                r //= p
                m += 1
            return (p, m) if r == 1 else None
        p += 1
    return (q, 1)


def _digits(a: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(a % p)
        a //= p
    return out


def _undigits(ds, p: int) -> int:
    val = 0
    for d in reversed(ds):
        val = val * p + d
    return val


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num by monic den over GF(p), coefficients low-first."""
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c:
            for j, dj in enumerate(den):
                num[i - dd + j] = (num[i - dd + j] - c * dj) % p
    return [c % p for c in num[:dd]]


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _irreducible(p: int, m: int) -> list[int]:
    """Smallest monic irreducible of degree m over GF(p), low-first coeffs."""
    if m == 1:
        return [0, 1]
    for code in range(p**m):
        # base-p digits of code are the non-leading coefficients, so ascending
        # code order is lexicographic in (c_{m-1}, ..., c_1, c_0)
        poly = _digits(code, p, m) + [1]
        divides = False
        for d in range(1, m // 2 + 1):
            for dc in range(p**d):
                div = _digits(dc, p, d) + [1]
                if not any(_poly_mod(poly, div, p)):
                    divides = True
                    break
            if divides:
                break
        if not divides:
            return poly
    raise ValueError(f"no irreducible polynomial of degree {m} over GF({p})")


class Field:
    """GF(q) with precomputed multiplication and inverse tables."""

    def __init__(self, q: int):
        pm = prime_power(q)
        if pm is None:
            raise ValueError(f"{q} is not a prime power")
        self.q = q
        self.p, self.m = pm
        self.modulus = _irreducible(self.p, self.m)
        self._mul = [[0] * q for _ in range(q)]
        for a in range(q):
            da = _digits(a, self.p, self.m)
            for b in range(a, q):
                db = _digits(b, self.p, self.m)
                prod = _poly_mod(_poly_mul(da, db, self.p), self.modulus, self.p)
                v = _undigits(prod, self.p)
                self._mul[a][b] = v
                self._mul[b][a] = v
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break

    def add(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if m == 1:
            return (a + b) % p
        da, db = _digits(a, p, m), _digits(b, p, m)
        return _undigits([(x + y) % p for x, y in zip(da, db)], p)

    def neg(self, a: int) -> int:
        p, m = self.p, self.m
        if m == 1:
            return (-a) % p
        return _undigits([(-x) % p for x in _digits(a, p, m)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._inv[a]

    def digits(self, a: int) -> tuple[int, ...]:
        """Base-p digit vector of an element (low digit first)."""
        return tuple(_digits(a, self.p, self.m))

    def from_digits(self, ds) -> int:
        return _undigits(list(ds), self.p)

    def elements(self) -> range:
        return range(self.q)

    def __repr__(self) -> str:  # pragma: no cover - debug aid
        return f"Field(GF({self.q}))"


@lru_cache(maxsize=None)
def GF(q: int) -> Field:
    """Cached field instance for a prime power q."""
    return Field(q)
