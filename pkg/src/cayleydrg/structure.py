"""Structural decompositions: line-graph recognition by clique partition,
connection-set structure for point graphs of generalized polygons, and the
lattice / cocktail-party / triangular characterizations as Cayley graphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .field import is_prime_power
from .graphs import (
    Graph,
    bipartition,
    cayley_graph,
    cocktail_party,
    is_connected,
    lattice,
    line_graph,
    triangular,
)
from .groups import (
    ConnectionSet,
    FiniteGroup,
    affine_square,
    is_general_product,
    is_subgroup,
    subgroup_closure,
)
from .spectral import srg_parameters
from .symmetry import are_isomorphic

__all__ = [
    "KrauszDecomposition",
    "krausz_decomposition",
    "ConnectionStructureReport",
    "connection_structure",
    "LatticeCheck",
    "lattice_check",
    "cocktail_check",
    "triangular_cayley",
]


@dataclass
class KrauszDecomposition:
    """Partition of the edge set into cliques, each vertex in at most two.

    `cell_pair[v]` gives the one or two cell indices through v; the root
    graph has the cells as vertices (plus a pendant cell for any vertex in
    only one), and v becomes the root edge joining its cells.
    """

    cliques: list[tuple[int, ...]]
    root: Graph
    cell_pair: list[tuple[int, int]]
    root_bipartite: bool

    def to_json(self) -> dict:
        return {
            "cells": [list(c) for c in self.cliques],
            "root_n": self.root.n,
            "root_m": self.root.m,
            "root_bipartite": self.root_bipartite,
        }


def _maximal_cliques(candidates: list[int], ok: callable) -> list[tuple[int, ...]]:
    """All maximal cliques (under `ok(u,v)` adjacency) in a small candidate
    set; plain Bron-Kerbosch."""
    out = []

    def bk(r: list[int], p: list[int], x: list[int]) -> None:
        if not p and not x:
            out.append(tuple(r))
            return
        for v in list(p):
            bk(r + [v], [u for u in p if ok(u, v)], [u for u in x if ok(u, v)])
            p.remove(v)
            x.append(v)

    bk([], list(candidates), [])
    return out


def krausz_decomposition(g: Graph) -> KrauszDecomposition | None:
    """Greedy-with-backtracking edge partition into cliques, at most two per
    vertex; None when no partition exists (g is not a line graph).

    Candidate cells for the first uncovered edge are its maximal cliques in
    the still-available graph plus the bare edge itself; a cell of size >= 3
    in any valid partition is always maximal among available vertices, so
    this candidate set keeps the search exhaustive.
    """
    if g.n < 4:
        raise ValueError(
            "line-graph recognition is ambiguous below 4 vertices "
            "(the triangle has two root graphs)"
        )
    if not is_connected(g):
        raise ValueError("line-graph recognition requires a connected graph")

    n = g.n
    adj = g.adj
    edges = g.edges()
    covered = np.zeros((n, n), dtype=bool)
    cell_count = np.zeros(n, dtype=np.int8)
    cells: list[tuple[int, ...]] = []
    # each stack frame: (edge index, candidate list, next candidate position)
    stack: list[tuple[int, list[tuple[int, ...]], int]] = []
    edge_pos = 0

    def next_uncovered(start: int) -> int:
        i = start
        while i < len(edges) and covered[edges[i]]:
            i += 1
        return i

    def candidates_for(u: int, v: int) -> list[tuple[int, ...]]:
        if cell_count[u] >= 2 or cell_count[v] >= 2:
            return []
        pool = [
            int(w)
            for w in np.where(adj[u] & adj[v])[0]
            if cell_count[w] < 2 and not covered[u, w] and not covered[v, w]
        ]

        def ok(a: int, b: int) -> bool:
            return bool(adj[a, b]) and not covered[a, b]

        cliques = [c for c in _maximal_cliques(pool, ok)]
        cells_out = [tuple(sorted((u, v) + c)) for c in cliques]
        cells_out.sort(key=lambda c: (-len(c), c))
        bare = (u, v)
        if bare not in cells_out:
            cells_out.append(bare)
        return cells_out

    def place(cell: tuple[int, ...]) -> None:
        for a, b in itertools.combinations(cell, 2):
            covered[a, b] = covered[b, a] = True
        for a in cell:
            cell_count[a] += 1
        cells.append(cell)

    def unplace() -> tuple[int, ...]:
        cell = cells.pop()
        for a, b in itertools.combinations(cell, 2):
            covered[a, b] = covered[b, a] = False
        for a in cell:
            cell_count[a] -= 1
        return cell

    while True:
        edge_pos = next_uncovered(stack[-1][0] if stack else 0)
        if edge_pos == len(edges):
            break  # everything covered
        u, v = edges[edge_pos]
        cands = candidates_for(u, v)
        placed = False
        while not placed:
            if cands:
                place(cands.pop(0))
                stack.append((edge_pos, cands, len(cells)))
                placed = True
            else:
                # backtrack
                if not stack:
                    return None
                edge_pos, cands, _ = stack.pop()
                unplace()
                u, v = edges[edge_pos]

    # root reconstruction: cells become vertices; vertices in one cell get a
    # pendant cell so every line-graph vertex is an edge of the root
    cell_of: list[list[int]] = [[] for _ in range(n)]
    for ci, cell in enumerate(cells):
        for v in cell:
            cell_of[v].append(ci)
    all_cells = list(cells)
    for v in range(n):
        if len(cell_of[v]) == 1:
            cell_of[v].append(len(all_cells))
            all_cells.append((v,))
        elif len(cell_of[v]) == 0:  # isolated vertex cannot occur (connected)
            raise AssertionError("vertex missed by the partition")
    pair = [tuple(sorted(cs)) for cs in cell_of]
    root = Graph.from_edges(len(all_cells), pair, name=f"root({g.name})" if g.name else "")
    # the identity map on vertices must carry g to the line graph of root
    for u in range(n):
        for v in range(u + 1, n):
            share = bool(set(pair[u]) & set(pair[v]))
            if share != bool(adj[u, v]):
                raise AssertionError("partition does not reproduce the graph")
    return KrauszDecomposition(
        cliques=[tuple(c) for c in cells],
        root=root,
        cell_pair=pair,
        root_bipartite=bipartition(root) is not None,
    )


# -- connection-set structure ---------------------------------------------------


@dataclass
class ConnectionStructureReport:
    """Structure of an inverse-closed connection set viewed through the
    point-graph lens: subgroup-pair form, per-element cyclic containment
    for elements of order 2d, conjugation witnesses, and the clique-coset
    fallback form S = (K union K*a) minus identity."""

    degree_2d: int
    subgroup_pair: tuple[tuple[int, ...], tuple[int, ...]] | None
    cyclic_containment: dict[int, bool]
    conjugation_witness: dict[int, int | None]
    coset_form: tuple[tuple[int, ...], int] | None
    subgroup_cliques: list[tuple[int, ...]]

    def to_json(self, group: FiniteGroup | None = None) -> dict:
        nm = (lambda x: group.name_of(x)) if group else str
        return {
            "order_2d": self.degree_2d,
            "subgroup_pair": None
            if self.subgroup_pair is None
            else [[nm(x) for x in h] for h in self.subgroup_pair],
            "cyclic_containment": {nm(a): v for a, v in sorted(self.cyclic_containment.items())},
            "conjugation_witness": {
                nm(a): (None if s is None else nm(s))
                for a, s in sorted(self.conjugation_witness.items())
            },
            "coset_form": None
            if self.coset_form is None
            else {"clique": [nm(x) for x in self.coset_form[0]], "a": nm(self.coset_form[1])},
            "subgroup_cliques": [[nm(x) for x in c] for c in self.subgroup_cliques],
        }


def _cliques_through_identity(group: FiniteGroup, conn: ConnectionSet) -> list[tuple[int, ...]]:
    """Maximal cliques of Cay(G, S) containing the identity vertex, as
    sorted element tuples including 0."""
    elems = conn.sorted()

    def ok(a: int, b: int) -> bool:
        return group.mul(a, group.inverse(b)) in conn

    out = [tuple(sorted((0,) + c)) for c in _maximal_cliques(elems, ok)]
    return sorted(out)


def connection_structure(
    group: FiniteGroup, conn: ConnectionSet, d: int
) -> ConnectionStructureReport:
    """Exhaustive checks of the subgroup-pair structure of S.

    d is the generalized-polygon diameter supplied by the caller; the
    per-element conditions quantify over elements of order 2d in S.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    S = conn.sorted()
    cliques = _cliques_through_identity(group, conn)
    subgroup_cliques = [c for c in cliques if is_subgroup(group, c)]

    # subgroup pair H, K with S = (H u K) \ {e} and trivial intersection
    pair = None
    for H, K in itertools.combinations(subgroup_cliques, 2):
        if len(H) != len(K):
            continue
        if set(H) & set(K) != {0}:
            continue
        if (set(H) | set(K)) - {0} == set(S):
            pair = (H, K)
            break

    order_2d = {a: None for a in S if group.order_of(a) == 2 * d}
    cyc = {}
    conj = {}
    for a in order_2d:
        cyc[a] = group.cyclic_subgroup(a) <= (set(S) | {0})
        witness = None
        inv_a = group.inverse(a)
        for s in S:
            if s in (a, inv_a):
                continue
            if group.conj(s, a) in conn:
                witness = s
                break
        conj[a] = witness

    # coset form: a maximal clique K through e and an element a with
    # S = (K u Ka) \ {e}
    coset = None
    for K in cliques:
        Kset = set(K)
        for a in S:
            Ka = {group.mul(k, a) for k in K}
            if (Kset | Ka) - {0} == set(S):
                coset = (K, a)
                break
        if coset:
            break

    return ConnectionStructureReport(
        degree_2d=2 * d,
        subgroup_pair=pair,
        cyclic_containment=cyc,
        conjugation_witness=conj,
        coset_form=coset,
        subgroup_cliques=subgroup_cliques,
    )


# -- lattice and cocktail characterizations --------------------------------------


@dataclass
class LatticeCheck:
    graph: Graph
    n: int
    general_product: bool
    iso_to_lattice: bool
    order4_condition: bool
    forward_ok: bool  # general product  =>  isomorphic to L2(n)
    converse_ok: bool  # iso + order-4 condition  =>  general product


def lattice_check(group: FiniteGroup, H, K) -> LatticeCheck:
    """Build S = (H u K) \\ {e} and test both directions of the
    general-product characterization of the rook's graphs."""
    H, K = frozenset(H), frozenset(K)
    if len(H) != len(K):
        raise ValueError("subgroups must have equal order")
    if not (is_subgroup(group, H) and is_subgroup(group, K)):
        raise ValueError("inputs must be subgroups")
    n = len(H)
    conn = ConnectionSet(group, (H | K) - {0})
    g = cayley_graph(group, conn)
    gp = is_general_product(group, H, K)
    iso = False
    if group.n == n * n:
        iso, _ = are_isomorphic(g, lattice(n))
    order4 = all(
        group.cyclic_subgroup(a) <= (conn.elems | {0})
        for a in conn.elems
        if group.order_of(a) == 4
    )
    forward_ok = (not gp) or iso
    converse_ok = (not (iso and order4)) or gp
    return LatticeCheck(
        graph=g,
        n=n,
        general_product=gp,
        iso_to_lattice=iso,
        order4_condition=order4,
        forward_ok=forward_ok,
        converse_ok=converse_ok,
    )


def cocktail_check(group: FiniteGroup, conn: ConnectionSet) -> int | None:
    """n = |G|/2 iff S = G minus the subgroup generated by an involution;
    the Cayley graph is then verified isomorphic to the cocktail-party
    graph CP(n)."""
    for a in group.elements():
        if a and group.order_of(a) == 2:
            if conn.elems == frozenset(group.elements()) - {0, a}:
                n = group.n // 2
                iso, _ = are_isomorphic(cayley_graph(group, conn), cocktail_party(n))
                assert iso, "cocktail-form connection set failed the isomorphism check"
                return n
    return None


def triangular_cayley(q: int) -> tuple[FiniteGroup, ConnectionSet, Graph]:
    """T(q) as a Cayley graph on the affine maps x -> ax+b (a a nonzero
    square) for prime powers q = 3 (mod 4), q <= 27.

    S holds the non-identity maps sending {0, 1} to an intersecting pair:
    image of 0 or of 1 lands in {0, 1}. Asserts |S| = 2(q-2) and checks the
    result against T(q): full certificate comparison for q <= 13, strongly
    regular parameter comparison above (conclusive for q != 8, which the
    congruence already excludes).
    """
    if q % 4 != 3 or not is_prime_power(q) or q > 27:
        raise ValueError("q must be a prime power = 3 (mod 4), at most 27")
    group = affine_square(q)
    f = group.field
    S = []
    for idx, (a, b) in enumerate(group.affine_elems):
        if idx == 0:
            continue
        img0 = b
        img1 = f.add(a, b)
        if img0 in (0, 1) or img1 in (0, 1):
            S.append(idx)
    conn = ConnectionSet(group, S)
    assert len(conn) == 2 * (q - 2), f"|S| = {len(conn)} != 2(q-2)"
    g = cayley_graph(group, conn)
    target = triangular(q)
    params = srg_parameters(g)
    assert params is not None and params.as_tuple() == srg_parameters(target).as_tuple()
    if q <= 13:
        iso, _ = are_isomorphic(g, target)
        assert iso, "affine construction is not isomorphic to T(q)"
    return group, conn, g
