"""Finite groups as explicit multiplication tables.

Every group is a table over element indices 0..n-1 with the identity at
index 0. Constructors cover the families used by the graph catalog:
cyclic groups, direct products, elementary abelian groups, semidirect
products <a,b | a^n=b^m=e, b^-1 a b = a^r>, the unitriangular (Heisenberg)
group over GF(p), and the group of affine maps x -> ax+b with a a nonzero
square.
"""

from __future__ import annotations

import string
from dataclasses import dataclass

import numpy as np

from .field import FiniteField, is_prime, is_prime_power

__all__ = [
    "FiniteGroup",
    "ConnectionSet",
    "Word",
    "cyclic",
    "direct_product",
    "elem_abelian",
    "semidirect",
    "heisenberg",
    "affine_square",
    "evaluate_word",
    "subgroup_closure",
    "subgroups_of_order",
    "SubgroupScan",
    "is_subgroup",
    "is_general_product",
]

_ASSOC_EXHAUSTIVE_LIMIT = 300
_ASSOC_RANDOM_TRIPLES = 100_000


class FiniteGroup:
    """Group of order n given by an n x n multiplication table.

    table[a, b] is the index of the product a*b. Index 0 is the identity.
    Generators are named; names drive the word grammar and report output.
    """

    def __init__(
        self,
        table: np.ndarray,
        gens: dict[str, int] | None = None,
        names: list[str] | None = None,
        tag: str = "",
        _skip_checks: bool = False,
    ):
        self.table = np.asarray(table, dtype=np.int32)
        self.n = self.table.shape[0]
        self.gens = dict(gens or {})
        self.names = list(names) if names else [f"g{i}" for i in range(self.n)]
        self.names[0] = "e"
        self.tag = tag or f"table({self.n})"
        if not _skip_checks:
            self._validate()
        inv = np.empty(self.n, dtype=np.int32)
        for g in range(self.n):
            hits = np.where(self.table[g] == 0)[0]
            if len(hits) != 1:
                raise ValueError(f"element {g} has {len(hits)} right inverses")
            inv[g] = hits[0]
        self.inv = inv
        if not np.array_equal(self.table[self.inv, np.arange(self.n)], np.zeros(self.n, dtype=np.int32)):
            raise ValueError("left and right inverses disagree")

    def _validate(self) -> None:
        n, T = self.n, self.table
        if T.shape != (n, n):
            raise ValueError("table must be square")
        idx = np.arange(n, dtype=np.int32)
        if not np.array_equal(T[0], idx) or not np.array_equal(T[:, 0], idx):
            raise ValueError("index 0 is not an identity")
        # Latin square: every row and column is a permutation
        if not (np.array_equal(np.sort(T, axis=1), np.tile(idx, (n, 1)))
                and np.array_equal(np.sort(T, axis=0), np.tile(idx[:, None], (1, n)))):
            raise ValueError("table is not a Latin square")
        if n <= _ASSOC_EXHAUSTIVE_LIMIT:
            for a in range(n):
                # (a*b)*c vs a*(b*c) for all b, c at once
                if not np.array_equal(T[T[a]], T[a][T]):
                    raise ValueError("associativity fails")
        else:
            rng = np.random.default_rng(0)
            for _ in range(_ASSOC_RANDOM_TRIPLES // 1000):
                a = rng.integers(0, n, size=1000)
                b = rng.integers(0, n, size=1000)
                c = rng.integers(0, n, size=1000)
                if not np.array_equal(T[T[a, b], c], T[a, T[b, c]]):
                    raise ValueError("associativity fails")

    # -- element arithmetic --------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inv[a])

    def power(self, a: int, e: int) -> int:
        if e < 0:
            return self.power(self.inverse(a), -e)
        r, base = 0, a
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r

    def order_of(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.mul(x, a)
            k += 1
        return k

    def conj(self, s: int, a: int) -> int:
        """s * a * s^-1."""
        return self.mul(self.mul(s, a), self.inverse(s))

    def elements(self) -> range:
        return range(self.n)

    def gen(self, name: str) -> int:
        if name not in self.gens:
            raise KeyError(f"unknown generator {name!r} in {self.tag}")
        return self.gens[name]

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def element_order_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.order_of(g) for g in self.elements()))

    def cyclic_subgroup(self, a: int) -> frozenset[int]:
        out, x = {0}, a
        while x != 0:
            out.add(x)
            x = self.mul(x, a)
        return frozenset(out)

    def translations(self) -> list[tuple[int, ...]]:
        """Vertex maps x -> x*g; with the ab^-1 adjacency rule these are
        automorphisms of every Cayley graph on this group."""
        return [tuple(int(v) for v in self.table[:, g]) for g in self.elements()]

    def name_of(self, a: int) -> str:
        return self.names[a]

    def __repr__(self) -> str:
        return f"FiniteGroup({self.tag}, order {self.n})"


@dataclass(frozen=True)
class Word:
    """A product of named generator powers, evaluated left to right."""

    factors: tuple[tuple[str, int], ...]

    def __str__(self) -> str:
        if not self.factors:
            return "e"
        return " ".join(n if e == 1 else f"{n}^{e}" for n, e in self.factors)


def evaluate_word(group: FiniteGroup, word: Word) -> int:
    x = 0
    for name, exp in word.factors:
        x = group.mul(x, group.power(group.gen(name), exp))
    return x


class ConnectionSet:
    """An inverse-closed subset of G \\ {e}; the constructor is the gate:
    violating sets raise instead of producing a broken graph later."""

    def __init__(self, group: FiniteGroup, elems):
        elems = frozenset(int(x) for x in elems)
        if 0 in elems:
            raise ValueError("connection set contains the identity")
        for x in elems:
            if group.inverse(x) not in elems:
                raise ValueError(
                    f"connection set not inverse-closed: {group.name_of(x)} in, "
                    f"{group.name_of(group.inverse(x))} out"
                )
            if not 0 <= x < group.n:
                raise ValueError("element index out of range")
        self.group = group
        self.elems = elems
        mask = np.zeros(group.n, dtype=bool)
        mask[list(elems)] = True
        self.mask = mask

    @classmethod
    def from_words(cls, group: FiniteGroup, words, invclose: bool = False) -> "ConnectionSet":
        elems = {evaluate_word(group, w) for w in words}
        if invclose:
            elems |= {group.inverse(x) for x in elems}
        return cls(group, elems)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask[x])

    def __len__(self) -> int:
        return len(self.elems)

    def sorted(self) -> list[int]:
        return sorted(self.elems)

    def names(self) -> list[str]:
        return [self.group.name_of(x) for x in self.sorted()]

    def __repr__(self) -> str:
        return f"ConnectionSet({self.group.tag}, {{{', '.join(self.names())}}})"


# -- constructors -------------------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("order must be positive")
    idx = np.arange(n, dtype=np.int32)
    table = (idx[:, None] + idx[None, :]) % n
    names = ["e"] + ["a" if i == 1 else f"a^{i}" for i in range(1, n)]
    return FiniteGroup(table, gens={"a": 1} if n > 1 else {}, names=names, tag=f"Z{n}")


def _letters(k: int) -> list[str]:
    if k > 26:
        raise ValueError("too many generators to name")
    return list(string.ascii_lowercase[:k])


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    """Direct product; generator names are relettered a, b, c, ... in order."""
    n1, n2 = g1.n, g2.n
    t1, t2 = g1.table.astype(np.int64), g2.table.astype(np.int64)
    # index (x, y) -> x*n2 + y
    x = np.arange(n1 * n2) // n2
    y = np.arange(n1 * n2) % n2
    table = t1[np.ix_(x, x)] * n2 + t2[np.ix_(y, y)]
    names = [
        f"({g1.name_of(i)},{g2.name_of(j)})" for i in range(n1) for j in range(n2)
    ]
    old = [i * n2 for i in g1.gens.values()] + [j for j in g2.gens.values()]
    gens = dict(zip(_letters(len(old)), old))
    return FiniteGroup(
        table.astype(np.int32), gens=gens, names=names, tag=f"{g1.tag} x {g2.tag}"
    )


def elem_abelian(p: int, k: int) -> FiniteGroup:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    g = cyclic(p)
    for _ in range(k - 1):
        g = direct_product(g, cyclic(p))
    g.tag = f"E({p},{k})"
    return g


def semidirect(n: int, m: int, r: int) -> FiniteGroup:
    """<a, b | a^n = b^m = e, b^-1 a b = a^r>; requires r^m = 1 (mod n).

    Elements are a^i b^j at index i*m + j. Internally
    (i, j)(i', j') = (i + t^j i' mod n, j + j' mod m) with t = r^-1 mod n,
    which makes the defining relation hold verbatim (asserted below).
    """
    r %= n
    from math import gcd

    if gcd(r, n) != 1:
        raise ValueError(f"action exponent {r} not invertible mod {n}")
    if pow(r, m, n) != 1:
        raise ValueError(f"invalid action: {r}^{m} != 1 (mod {n})")
    t = pow(r, -1, n)
    i = np.arange(n * m) // m
    j = np.arange(n * m) % m
    tj = np.array([pow(t, int(jj), n) for jj in range(m)], dtype=np.int64)
    table = ((i[:, None] + tj[j[:, None]] * i[None, :]) % n) * m + (j[:, None] + j[None, :]) % m

    def nm(i: int, j: int) -> str:
        pa = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
        pb = "" if j == 0 else ("b" if j == 1 else f"b^{j}")
        return (pa + (" " if pa and pb else "") + pb) or "e"

    names = [nm(ii, jj) for ii in range(n) for jj in range(m)]
    g = FiniteGroup(
        table.astype(np.int32),
        gens={"a": m, "b": 1},
        names=names,
        tag=f"SD({n},{m},{r})",
    )
    a, b = g.gen("a"), g.gen("b")
    assert g.mul(g.mul(g.inverse(b), a), b) == g.power(a, r), "relation b^-1 a b = a^r broken"
    assert g.order_of(a) == n and (m == 1 or g.order_of(b) == m)
    return g


def heisenberg(p: int) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over GF(p).

    Element (x, y, z) = I + x*E12 + y*E23 + z*E13 at index x*p^2 + y*p + z.
    Generators a = I+E12, b = I+E23, and c = (ab)^-1 (ba), so that abc = ba.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    xs = np.arange(p**3) // (p * p)
    ys = (np.arange(p**3) // p) % p
    zs = np.arange(p**3) % p
    # (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y')
    table = (
        ((xs[:, None] + xs[None, :]) % p) * p * p
        + ((ys[:, None] + ys[None, :]) % p) * p
        + (zs[:, None] + zs[None, :] + xs[:, None] * ys[None, :]) % p
    )
    names = [f"({x},{y},{z})" for x in range(p) for y in range(p) for z in range(p)]
    a = p * p  # (1,0,0)
    b = p  # (0,1,0)
    g = FiniteGroup(table.astype(np.int32), gens={"a": a, "b": b}, names=names, tag=f"HEIS({p})")
    c = g.mul(g.inverse(g.mul(a, b)), g.mul(b, a))
    g.gens["c"] = c
    assert g.mul(g.mul(a, b), c) == g.mul(b, a), "relation abc = ba broken"
    return g


def affine_square(q: int) -> FiniteGroup:
    """Maps x -> a x + b on GF(q) with a a nonzero square; |G| = q(q-1)/2.

    Elements are ordered lexicographically by (a, b) in the canonical
    integer encoding of field elements; composition applies the right
    factor first.
    """
    pk = is_prime_power(q)
    if pk is None or q % 2 == 0:
        raise ValueError(f"order {q} must be an odd prime power")
    f = FiniteField(*pk)
    squares = sorted(f.nonzero_squares())
    elems = [(a, b) for a in squares for b in range(q)]
    index = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    assert n == q * (q - 1) // 2
    table = np.empty((n, n), dtype=np.int32)
    for i, (a1, b1) in enumerate(elems):
        for j, (a2, b2) in enumerate(elems):
            # (T1 o T2)(x) = a1(a2 x + b2) + b1
            table[i, j] = index[(f.mul(a1, a2), f.add(f.mul(a1, b2), b1))]
    names = [f"[{a}x+{b}]" for a, b in elems]
    g = FiniteGroup(table, gens={}, names=names, tag=f"AFFSQ({q})")
    g.field = f
    g.affine_elems = elems
    # a convenient generating pair when one exists: a translation and a scaling
    gens: dict[str, int] = {}
    if (1, 1) in index:
        gens["t"] = index[(1, 1)]
    for a in squares:
        if a != 1:
            gens["s"] = index[(a, 0)]
            break
    g.gens = gens
    return g


# -- subgroup machinery --------------------------------------------------------


def subgroup_closure(group: FiniteGroup, seed) -> frozenset[int]:
    """Least subgroup containing seed. Cay(G, S) is connected iff the
    closure of S is all of G."""
    seed = {int(x) for x in seed}
    gens = seed | {group.inverse(x) for x in seed}
    out = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = group.mul(x, s)
                if y not in out:
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(out)


def is_subgroup(group: FiniteGroup, S) -> bool:
    S = frozenset(int(x) for x in S)
    if 0 not in S:
        return False
    for a in S:
        if group.inverse(a) not in S:
            return False
        for b in S:
            if group.mul(a, b) not in S:
                return False
    return True


@dataclass
class SubgroupScan:
    """All subgroups of one order; `complete` records the guaranteed regime
    (k <= 16 or abelian host) even though the join closure used here is
    exhaustive for the orders this library touches."""

    order: int
    subgroups: list[frozenset[int]]
    complete: bool

    def __iter__(self):
        return iter(self.subgroups)

    def __len__(self) -> int:
        return len(self.subgroups)


def subgroups_of_order(group: FiniteGroup, k: int) -> SubgroupScan:
    if group.n > 2000:
        raise ValueError("subgroup scan limited to |G| <= 2000")
    if k < 1 or group.n % k:
        raise ValueError(f"{k} does not divide |G| = {group.n}")
    if k == 1:
        return SubgroupScan(1, [frozenset({0})], True)
    cyclics = {group.cyclic_subgroup(a) for a in group.elements()}
    known = {s for s in cyclics if len(s) <= k}
    frontier = set(known)
    while frontier:
        fresh = set()
        for A in frontier:
            for B in known:
                if len(A) * len(B) > group.n:
                    continue
                J = subgroup_closure(group, A | B)
                if len(J) <= k and J not in known and J not in fresh:
                    fresh.add(J)
        known |= fresh
        frontier = fresh
    subs = sorted((s for s in known if len(s) == k), key=sorted)
    complete = k <= 16 or group.is_abelian()
    return SubgroupScan(k, subs, complete)


def is_general_product(group: FiniteGroup, H, K) -> bool:
    """G = HK with H and K intersecting only in the identity.

    Checked both by counting and by verifying the product map is onto."""
    H, K = frozenset(H), frozenset(K)
    if not (is_subgroup(group, H) and is_subgroup(group, K)):
        raise ValueError("inputs must be subgroups")
    if len(H) * len(K) != group.n or (H & K) != {0}:
        return False
    products = {group.mul(h, k) for h in H for k in K}
    return len(products) == group.n
