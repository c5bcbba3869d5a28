"""Finite field arithmetic GF(p^k) over an explicit irreducible modulus.

Elements are canonical integers 0..p^k-1 encoding coefficient vectors in
base p (value = sum c_i * p^i), so equality is plain integer equality and
elements can key dictionaries and group tables directly.
"""

from __future__ import annotations

import numpy as np

__all__ = ["FiniteField", "is_prime", "is_prime_power"]

# Tables are only precomputed below this order; larger fields fall back to
# per-operation polynomial arithmetic.
_TABLE_LIMIT = 512


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def is_prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, k) with n = p^k for prime p, or None."""
    if n < 2:
        return None
    for p in range(2, n + 1):
        if p * p > n:
            break
        if n % p:
            continue
        k, m = 0, n
        while m % p == 0:
            m //= p
            k += 1
        return (p, k) if m == 1 else None
    return (n, 1)


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    # m is monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * mi) % p
        a.pop()
    return _poly_trim(a)


def _int_to_poly(x: int, p: int) -> list[int]:
    c = []
    while x:
        c.append(x % p)
        x //= p
    return c


def _poly_to_int(c: list[int], p: int) -> int:
    x = 0
    for ci in reversed(c):
        x = x * p + ci
    return x


def _is_irreducible(m: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(m)//2."""
    deg = len(m) - 1
    for d in range(1, deg // 2 + 1):
        for low in range(p**d):
            div = _int_to_poly(low, p)
            div += [0] * (d - len(div)) + [1]
            if not _poly_mod(m, div, p):
                return False
    # degree-1 divisors double as the root test for deg <= 3
    return True


class FiniteField:
    """GF(p^k) with a deterministically chosen modulus.

    The modulus is the lexicographically least monic irreducible of degree k
    (least as an integer: sum of non-leading coefficients times p^i).
    """

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if not 1 <= k <= 4:
            raise ValueError("extension degree must be 1..4")
        if p**k > 10**4:
            raise ValueError("field order above 10^4 not supported")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = self._least_irreducible()
        self._add = None
        self._mul = None
        self._inv = None
        if self.q <= _TABLE_LIMIT:
            self._build_tables()

    def _least_irreducible(self) -> tuple[int, ...]:
        if self.k == 1:
            return (0, 1)  # x
        for low in range(self.q):
            m = _int_to_poly(low, self.p)
            m += [0] * (self.k - len(m)) + [1]
            if _is_irreducible(m, self.p):
                return tuple(m)
        raise RuntimeError("no irreducible modulus found")  # unreachable

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        polys = [_int_to_poly(x, p) for x in range(q)]
        add = np.zeros((q, q), dtype=np.int32)
        mul = np.zeros((q, q), dtype=np.int32)
        m = list(self.modulus)
        for a in range(q):
            pa = polys[a]
            for b in range(a, q):
                pb = polys[b]
                s = [0] * max(len(pa), len(pb))
                for i, ci in enumerate(pa):
                    s[i] = ci
                for i, ci in enumerate(pb):
                    s[i] = (s[i] + ci) % p
                add[a, b] = add[b, a] = _poly_to_int(_poly_trim(s), p)
                prod = _poly_mod(_poly_mul(pa, pb, p), m, p)
                mul[a, b] = mul[b, a] = _poly_to_int(prod, p)
        self._add, self._mul = add, mul
        inv = np.zeros(q, dtype=np.int32)
        for a in range(1, q):
            hits = np.where(mul[a] == 1)[0]
            if len(hits) != 1:
                raise RuntimeError(f"element {a} lacks a unique inverse")
            inv[a] = hits[0]
        self._inv = inv

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add is not None:
            return int(self._add[a, b])
        pa, pb = _int_to_poly(a, self.p), _int_to_poly(b, self.p)
        s = [0] * max(len(pa), len(pb))
        for i, ci in enumerate(pa):
            s[i] = ci
        for i, ci in enumerate(pb):
            s[i] = (s[i] + ci) % self.p
        return _poly_to_int(_poly_trim(s), self.p)

    def neg(self, a: int) -> int:
        c = [(-ci) % self.p for ci in _int_to_poly(a, self.p)]
        return _poly_to_int(_poly_trim(c), self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul is not None:
            return int(self._mul[a, b])
        prod = _poly_mul(_int_to_poly(a, self.p), _int_to_poly(b, self.p), self.p)
        return _poly_to_int(_poly_mod(prod, list(self.modulus), self.p), self.p)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._inv is not None:
            return int(self._inv[a])
        # Lagrange: a^(q-2) inverts a
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        r, base = 1, a
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r

    # -- structure ----------------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def coeffs(self, a: int) -> tuple[int, ...]:
        c = _int_to_poly(a, self.p)
        return tuple(c + [0] * (self.k - len(c)))

    def minus_one(self) -> int:
        return self.neg(1)

    def nonzero_squares(self) -> frozenset[int]:
        """The set {x^2 : x != 0}; size (q-1)/2 for odd q, q-1 for even q."""
        sq = frozenset(self.mul(x, x) for x in range(1, self.q))
        if self.p != 2:
            assert len(sq) == (self.q - 1) // 2
        if self.q % 4 == 3:
            assert self.minus_one() not in sq
        return sq

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteField)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))
