"""Permutations as tuples and permutation groups via stabilizer chains.

The Schreier-Sims construction here is the deterministic incremental
variant: every Schreier generator is sifted, so the resulting chain is
exact and the reported group order is a proof, not an estimate.
"""

from __future__ import annotations

from math import gcd

__all__ = [
    "identity",
    "compose",
    "invert",
    "perm_order",
    "PermutationGroup",
]

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(x) = p(q(x)); q is applied first."""
    return tuple(p[x] for x in q)


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def perm_order(p: Perm) -> int:
    seen = [False] * len(p)
    order = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        order = order * length // gcd(order, length)
    return order


class _Level:
    """One stabilizer-chain level: a base point, generators of the current
    stabilizer, and a transversal orbit -> coset representative."""

    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int, degree: int):
        self.point = point
        self.gens: list[Perm] = []
        self.transversal: dict[int, Perm] = {point: identity(degree)}

    def extend_orbit(self) -> list[tuple[int, Perm]]:
        """Recompute the orbit/transversal; returns newly reached points."""
        new = []
        frontier = list(self.transversal.items())
        while frontier:
            nxt = []
            for pt, rep in frontier:
                for g in self.gens:
                    img = g[pt]
                    if img not in self.transversal:
                        t = compose(g, rep)
                        self.transversal[img] = t
                        nxt.append((img, t))
                        new.append((img, t))
            frontier = nxt
        return new


class PermutationGroup:
    """Permutation group with an exact stabilizer chain."""

    def __init__(self, degree: int, generators, base_hint=()):
        self.degree = degree
        self.generators: list[Perm] = [tuple(g) for g in generators]
        for g in self.generators:
            if sorted(g) != list(range(degree)):
                raise ValueError("generator is not a permutation of 0..n-1")
        self.levels: list[_Level] = []
        self._base_hint = tuple(base_hint)
        self._build()

    # -- construction -------------------------------------------------------

    def _build(self) -> None:
        for g in self.generators:
            self._add_generator(0, g)

    def _add_generator(self, level: int, g: Perm) -> None:
        if g == identity(self.degree):
            return
        if level == len(self.levels):
            # fresh base point: unused hints first (even if g fixes them,
            # so point_stabilizer rebasing is reliable), else first moved
            pt = None
            for h in self._base_hint:
                if all(lv.point != h for lv in self.levels):
                    pt = h
                    break
            if pt is None:
                pt = next(i for i, x in enumerate(g) if i != x)
            self.levels.append(_Level(pt, self.degree))
        lv = self.levels[level]
        lv.gens.append(g)
        known = list(lv.transversal.items())
        new = lv.extend_orbit()
        # sift Schreier generators for the new generator against old points
        # and all generators against new points
        for pt, rep in known:
            self._sift_schreier(level, g, pt, rep)
        for pt, rep in new:
            for h in lv.gens:
                self._sift_schreier(level, h, pt, rep)

    def _sift_schreier(self, level: int, g: Perm, pt: int, rep: Perm) -> None:
        lv = self.levels[level]
        img = g[pt]
        rep_img = lv.transversal[img]
        schreier = compose(invert(rep_img), compose(g, rep))
        residue, depth = self._sift_from(level + 1, schreier)
        if residue is not None:
            self._add_generator(depth, residue)

    def _sift_from(self, level: int, p: Perm) -> tuple[Perm | None, int]:
        """Sift p through levels >= level; (residue, level it stuck at) or
        (None, -1) when p factors through the chain."""
        for i in range(level, len(self.levels)):
            lv = self.levels[i]
            img = p[lv.point]
            if img == lv.point:
                continue
            if img not in lv.transversal:
                return p, i
            p = compose(invert(lv.transversal[img]), p)
        if p == identity(self.degree):
            return None, -1
        return p, len(self.levels)

    # -- queries ------------------------------------------------------------

    def order(self) -> int:
        out = 1
        for lv in self.levels:
            out *= len(lv.transversal)
        return out

    def contains(self, p: Perm) -> bool:
        if len(p) != self.degree:
            return False
        residue, _ = self._sift_from(0, tuple(p))
        return residue is None

    def base(self) -> list[int]:
        return [lv.point for lv in self.levels]

    def orbit_of(self, x: int) -> frozenset[int]:
        seen = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for pt in frontier:
                for g in self.generators:
                    img = g[pt]
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        return frozenset(seen)

    def orbits(self) -> list[frozenset[int]]:
        left = set(range(self.degree))
        out = []
        while left:
            orb = self.orbit_of(min(left))
            out.append(orb)
            left -= orb
        return out

    def is_transitive(self) -> bool:
        return self.degree == 0 or len(self.orbit_of(0)) == self.degree

    def transversal_at(self, level: int) -> dict[int, Perm]:
        return dict(self.levels[level].transversal)

    def elements(self, limit: int = 2_000_000):
        """Iterate all elements (products over transversals). Guarded."""
        if self.order() > limit:
            raise ValueError(f"group too large to enumerate ({self.order()})")
        reps = [list(lv.transversal.values()) for lv in self.levels]
        if not reps:
            yield identity(self.degree)
            return

        def rec(i: int, acc: Perm):
            if i < 0:
                yield acc
                return
            for t in reps[i]:
                yield from rec(i - 1, compose(t, acc))

        yield from rec(len(reps) - 1, identity(self.degree))

    def point_stabilizer(self, x: int) -> "PermutationGroup":
        """The stabilizer of x, as its own group (chain rebased at x)."""
        rebased = self if (self.levels and self.levels[0].point == x) else \
            PermutationGroup(self.degree, self.generators, base_hint=(x,))
        if not rebased.levels or rebased.levels[0].point != x:
            # x is fixed by the whole group
            return rebased
        gens = []
        for lv in rebased.levels[1:]:
            gens.extend(lv.gens)
        sub = PermutationGroup(self.degree, gens)
        assert sub.order() * len(rebased.levels[0].transversal) == rebased.order()
        return sub

    def __repr__(self) -> str:
        return f"PermutationGroup(degree={self.degree}, order={self.order()})"
