"""Canonical labeling, isomorphism, automorphism groups, and the
regular-subgroup decision ("is this graph a Cayley graph?").

The canonical/automorphism engine is individualization-refinement with
orbit pruning by the automorphisms discovered so far: a branch vertex is
skipped only when an already-found automorphism fixing the current base
maps it onto an explored sibling, so pruning is always certified and the
discovered generators generate the full automorphism group.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .graphs import Graph, cayley_graph
from .groups import ConnectionSet, FiniteGroup, subgroup_closure
from .perm import PermutationGroup, compose, identity, invert, perm_order

__all__ = [
    "CanonicalForm",
    "canonical_form",
    "are_isomorphic",
    "automorphism_group",
    "OrbitInfo",
    "orbits",
    "CayleyCertificate",
    "RegularSearchResult",
    "regular_subgroup_search",
]

MAX_CANONICAL_N = 1000
MAX_AUT_N = 700


def _refine(adj_lists, colors: list[int]) -> list[int]:
    """Equitable refinement: split by (color, multiset of neighbor colors)
    until stable. New color ids follow sorted signature order, which is
    isomorphism-equivariant."""
    n = len(colors)
    while True:
        sigs = []
        for v in range(n):
            cnt = Counter(colors[u] for u in adj_lists[v])
            sigs.append((colors[v], tuple(sorted(cnt.items()))))
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _individualize(colors: list[int], v: int) -> list[int]:
    return [2 * c + (1 if u == v else 0) for u, c in enumerate(colors)]


def _pack_cert(adj: np.ndarray, order: list[int]) -> bytes:
    sub = adj[np.ix_(order, order)]
    bits = sub[np.triu_indices(len(order), 1)]
    return len(order).to_bytes(4, "big") + np.packbits(bits).tobytes()


class _Engine:
    """One individualization-refinement search over a fixed graph."""

    def __init__(self, g: Graph):
        self.adj = g.adj
        self.n = g.n
        self.adj_lists = [np.where(g.adj[v])[0].tolist() for v in range(g.n)]
        self.best_cert: bytes | None = None
        self.best_order: list[int] | None = None
        self.first_cert: bytes | None = None
        self.first_order: list[int] | None = None
        self.auts: list[tuple[int, ...]] = []
        self._aut_seen: set[tuple[int, ...]] = set()

    def run(self) -> None:
        if self.n == 0:
            self.best_cert = _pack_cert(self.adj, [])
            self.best_order = []
            return
        colors = _refine(self.adj_lists, [0] * self.n)
        self._node(colors, [])

    # -- search -------------------------------------------------------------

    def _node(self, colors: list[int], base: list[int]) -> None:
        ncells = len(set(colors))
        if ncells == self.n:
            self._leaf(colors)
            return
        # first smallest non-singleton cell, in color order
        sizes = Counter(colors)
        target_color = min(
            (c for c, s in sizes.items() if s > 1), key=lambda c: (sizes[c], c)
        )
        members = sorted(v for v in range(self.n) if colors[v] == target_color)
        explored: list[int] = []
        for v in members:
            if explored and self._in_explored_orbit(v, explored, base):
                continue
            child = _refine(self.adj_lists, _individualize(colors, v))
            self._node(child, base + [v])
            explored.append(v)

    def _in_explored_orbit(self, v: int, explored: list[int], base: list[int]) -> bool:
        gens = [a for a in self.auts if all(a[b] == b for b in base)]
        if not gens:
            return False
        seen = {v}
        frontier = [v]
        hits = set(explored)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = g[x]
                    if y in hits:
                        return True
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return False

    def _leaf(self, colors: list[int]) -> None:
        order = [0] * self.n  # position -> vertex
        for v, c in enumerate(colors):
            order[c] = v
        cert = _pack_cert(self.adj, order)
        if self.first_cert is None:
            self.first_cert, self.first_order = cert, order
            self.best_cert, self.best_order = cert, order
            return
        for ref_cert, ref_order in ((self.first_cert, self.first_order),
                                    (self.best_cert, self.best_order)):
            if cert == ref_cert and ref_order != order:
                phi = [0] * self.n
                for i in range(self.n):
                    phi[ref_order[i]] = order[i]
                tphi = tuple(phi)
                if tphi not in self._aut_seen:
                    self._aut_seen.add(tphi)
                    self.auts.append(tphi)
                break
        if cert < self.best_cert:
            self.best_cert, self.best_order = cert, order


_cache: dict[bytes, _Engine] = {}
_CACHE_MAX = 32


def _engine_for(g: Graph) -> _Engine:
    key = g.n.to_bytes(4, "big") + g.adj.tobytes()
    eng = _cache.get(key)
    if eng is None:
        eng = _Engine(g)
        eng.run()
        if len(_cache) >= _CACHE_MAX:
            _cache.pop(next(iter(_cache)))
        if g.n <= 128:
            _cache[key] = eng
    return eng


@dataclass
class CanonicalForm:
    order: tuple[int, ...]  # position -> vertex
    labeling: tuple[int, ...]  # vertex -> position
    certificate: str

    def __post_init__(self):
        assert sorted(self.order) == list(range(len(self.order)))


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical labeling; two graphs get equal certificate strings iff
    they are isomorphic."""
    if g.n > MAX_CANONICAL_N:
        raise ValueError(f"canonical form limited to {MAX_CANONICAL_N} vertices")
    eng = _engine_for(g)
    order = tuple(eng.best_order)
    labeling = tuple(invert(order))
    return CanonicalForm(order, labeling, eng.best_cert.hex())


def are_isomorphic(g1: Graph, g2: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """Certificate comparison; on success the witness mapping g1 -> g2 is
    verified edge by edge before being returned."""
    if g1.n != g2.n or g1.m != g2.m:
        return False, None
    if sorted(g1.degrees().tolist()) != sorted(g2.degrees().tolist()):
        return False, None
    c1, c2 = canonical_form(g1), canonical_form(g2)
    if c1.certificate != c2.certificate:
        return False, None
    mapping = tuple(c2.order[c1.labeling[v]] for v in range(g1.n))
    m = np.array(mapping)
    if not np.array_equal(g1.adj, g2.adj[np.ix_(m, m)]):
        raise AssertionError("certificate collision: mapping failed edge check")
    return True, mapping


def automorphism_group(g: Graph) -> PermutationGroup:
    """Generators from the refinement search; exact order via the
    stabilizer chain."""
    if g.n > MAX_AUT_N:
        raise ValueError(f"automorphism group limited to {MAX_AUT_N} vertices")
    eng = _engine_for(g)
    return PermutationGroup(g.n, eng.auts)


@dataclass
class OrbitInfo:
    vertex_orbits: list[frozenset[int]]
    edge_orbits: list[frozenset[tuple[int, int]]]
    vertex_transitive: bool
    edge_transitive: bool


def orbits(g: Graph, group: PermutationGroup | None = None) -> OrbitInfo:
    """Vertex and edge orbit partitions under Aut(g) (or a supplied group)."""
    group = group or automorphism_group(g)
    if group.degree != g.n:
        raise ValueError("group degree does not match the vertex set")
    vorbs = group.orbits()
    edges = g.edges()
    eidx = {e: i for i, e in enumerate(edges)}
    parent = list(range(len(edges)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for gperm in group.generators:
        for e, (u, v) in enumerate(edges):
            iu, iv = gperm[u], gperm[v]
            img = eidx[(iu, iv) if iu < iv else (iv, iu)]
            ri, rj = find(e), find(img)
            if ri != rj:
                parent[ri] = rj
    groups: dict[int, set] = {}
    for e, edge in enumerate(edges):
        groups.setdefault(find(e), set()).add(edge)
    eorbs = [frozenset(s) for s in groups.values()]
    return OrbitInfo(
        vertex_orbits=vorbs,
        edge_orbits=eorbs,
        vertex_transitive=len(vorbs) <= 1,
        edge_transitive=len(eorbs) <= 1,
    )


# -- regular subgroups ---------------------------------------------------------


@dataclass
class CayleyCertificate:
    """A verified presentation of a graph as Cay(group, connection_set).

    The bijection sends group element index i to graph vertex bijection[i];
    re-verification is an exact adjacency comparison."""

    group: FiniteGroup
    connection_set: ConnectionSet
    bijection: tuple[int, ...]

    def verify(self, g: Graph) -> bool:
        cay = cayley_graph(self.group, self.connection_set)
        b = np.array(self.bijection)
        return bool(np.array_equal(cay.adj, g.adj[np.ix_(b, b)]))

    def to_json(self) -> dict:
        import hashlib

        digest = hashlib.sha256(self.group.table.tobytes()).hexdigest()[:16]
        return {
            "group_order": self.group.n,
            "group_table_digest": digest,
            "group_abelian": self.group.is_abelian(),
            "element_orders": list(self.group.element_order_multiset()),
            "connection_set": self.connection_set.sorted(),
            "bijection": list(self.bijection),
        }


@dataclass
class RegularSearchResult:
    status: str  # "cayley" | "none" | "timeout"
    certificate: CayleyCertificate | None = None
    reason: str = ""

    def to_json(self) -> dict:
        out = {"status": self.status, "reason": self.reason}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


_STAB_ENUM_LIMIT = 200_000


def regular_subgroup_search(
    g: Graph,
    aut: PermutationGroup | None = None,
    budget_s: float = 60.0,
) -> RegularSearchResult:
    """Search Aut(g) for a subgroup acting sharply transitively on vertices.

    "none" is exhaustive (the graph is proved not to be a Cayley graph);
    "timeout" is inconclusive. A found subgroup is returned as a verified
    CayleyCertificate.
    """
    deadline = time.monotonic() + budget_s
    n = g.n
    aut = aut or automorphism_group(g)
    if not aut.is_transitive():
        return RegularSearchResult("none", reason="Aut(g) is not vertex-transitive")
    if aut.order() % n:
        return RegularSearchResult(
            "none", reason=f"vertex count {n} does not divide |Aut| = {aut.order()}"
        )
    rebased = PermutationGroup(n, aut.generators, base_hint=(0,))
    transversal = rebased.transversal_at(0)
    stab = rebased.point_stabilizer(0)
    if stab.order() > _STAB_ENUM_LIMIT:
        return RegularSearchResult(
            "timeout", reason=f"stabilizer too large to enumerate ({stab.order()})"
        )
    stab_elems = sorted(stab.elements())

    def candidates(v: int) -> list[tuple[int, ...]]:
        tau = transversal[v]
        out = []
        for s in stab_elems:
            cand = compose(tau, s)
            if n % perm_order(cand) == 0:
                out.append(cand)
        return sorted(out)

    ident = identity(n)

    def propagate(assign: dict[int, tuple[int, ...]], fresh: list[int]) -> bool:
        """Close the partial map under composition and inversion; a partial
        regular group determines g_(gu(v)) = gu o gv for any two assigned
        vertices. Returns False on contradiction."""
        queue = list(fresh)
        while queue:
            v = queue.pop()
            gv = assign[v]
            pairs = [(gv, gu) for gu in list(assign.values())]
            pairs += [(gu, gv) for gu in list(assign.values())]
            inv_gv = invert(gv)
            pairs.append((inv_gv, ident))
            for p, q in pairs:
                prod = compose(p, q)
                w = prod[0]
                old = assign.get(w)
                if old is None:
                    if n % perm_order(prod) != 0:
                        return False
                    assign[w] = prod
                    queue.append(w)
                elif old != prod:
                    return False
        return True

    sentinel_timeout = RegularSearchResult("timeout", reason="budget exhausted")

    def search(assign: dict[int, tuple[int, ...]], level: int) -> RegularSearchResult | None:
        if time.monotonic() > deadline:
            return sentinel_timeout
        if len(assign) == n:
            return _certify(g, assign)
        v = min(u for u in range(n) if u not in assign)
        seen_conj: set[tuple[int, ...]] = set()
        first_level = len(assign) == 1
        fixers = [s for s in stab_elems if s[v] == v] if first_level else []
        for cand in candidates(v):
            if first_level:
                # conjugating a regular subgroup by a point stabilizer element
                # fixing v yields another one with the same decision outcome
                rep = min(compose(s, compose(cand, invert(s))) for s in fixers)
                if rep in seen_conj:
                    continue
                seen_conj.add(rep)
            trial = dict(assign)
            trial[v] = cand
            if propagate(trial, [v]):
                res = search(trial, level + 1)
                if res is not None:
                    return res
        return None

    result = search({0: ident}, 0)
    if result is None:
        return RegularSearchResult(
            "none", reason="exhaustive search found no regular subgroup"
        )
    return result


def _certify(g: Graph, assign: dict[int, tuple[int, ...]]) -> RegularSearchResult:
    n = g.n
    perms = [assign[v] for v in range(n)]
    table = np.empty((n, n), dtype=np.int32)
    for v in range(n):
        col = perms[v]
        for u in range(n):
            table[u, v] = col[u]  # (u, v) -> g_v(u); identity lands at index 0
    group = FiniteGroup(table, tag=f"regular-subgroup({n})")
    # name a generating subset for word output
    gens: dict[str, int] = {}
    have = subgroup_closure(group, set())
    i = 0
    for x in range(1, n):
        if x not in have:
            gens[f"g{i}"] = x
            i += 1
            have = subgroup_closure(group, set(gens.values()))
            if len(have) == n:
                break
    group.gens = gens
    conn = ConnectionSet(group, [int(x) for x in np.where(g.adj[0])[0]])
    cert = CayleyCertificate(group, conn, tuple(range(n)))
    assert cert.verify(g), "regular subgroup failed re-verification"
    return RegularSearchResult("cayley", certificate=cert)
