"""Group-order arithmetic used for non-existence arguments: Sylow counts,
"every group of order n is abelian" detection, abelian group enumeration,
and the edge-regular abelian obstruction for line graphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graphs import Graph, bipartition, is_connected
from .groups import FiniteGroup, cyclic, direct_product, subgroup_closure, subgroups_of_order

__all__ = [
    "factorize",
    "sylow_candidates",
    "all_groups_abelian",
    "abelian_groups",
    "OrderAnalysis",
    "order_analysis",
    "ObstructionReport",
    "line_graph_abelian_obstruction",
    "HkScan",
    "hk_generation_scan",
]


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def sylow_candidates(n: int, p: int) -> list[int]:
    """Possible Sylow p-subgroup counts: divisors d of n/p^a with
    d = 1 (mod p). Always contains 1."""
    fac = factorize(n)
    if p not in fac:
        raise ValueError(f"{p} does not divide {n}")
    rest = n // p ** fac[p]
    return [d for d in range(1, rest + 1) if rest % d == 0 and d % p == 1]


def all_groups_abelian(n: int) -> str:
    """"yes" / "no" / "unknown": is every group of order n abelian?

    Exact on the shapes p, p^2, pq, p^2 q. For p^2 q the Sylow-forcing test
    is a dichotomy: when some count is unforced, q | p^2 - 1 or p | q - 1
    and an explicit nonabelian semidirect product of that order exists.
    Outside those shapes, "no" is returned only with a concrete witness
    family (dihedral for even n, a nonabelian pq factor, or a nonabelian
    group of order p^3, each extended by a cyclic complement); otherwise
    "unknown" - never a guess.
    """
    if n < 1:
        raise ValueError("order must be positive")
    fac = factorize(n)
    primes = sorted(fac)
    shape = tuple(sorted(fac.values(), reverse=True))
    if len(fac) == 1 and fac[primes[0]] <= 2:
        return "yes"  # p or p^2
    if len(fac) == 2 and shape == (1, 1):
        p, q = primes
        return "yes" if (q - 1) % p else "no"
    if len(fac) == 2 and shape == (2, 1):
        p = next(r for r in primes if fac[r] == 2)
        q = next(r for r in primes if fac[r] == 1)
        forced = sylow_candidates(n, p) == [1] and sylow_candidates(n, q) == [1]
        return "yes" if forced else "no"
    # witness patterns only
    if n % 2 == 0 and n >= 6:
        return "no"  # dihedral of order n
    for p, q in itertools.permutations(primes, 2):
        if (q - 1) % p == 0:
            return "no"  # (Z_q x| Z_p) x cyclic
    for p in primes:
        if fac[p] >= 3:
            return "no"  # nonabelian group of order p^3, times cyclic
    return "unknown"


def _partitions(k: int) -> list[tuple[int, ...]]:
    if k == 0:
        return [()]
    out = []

    def rec(rest: int, maxpart: int, acc: tuple[int, ...]):
        if rest == 0:
            out.append(acc)
            return
        for part in range(min(rest, maxpart), 0, -1):
            rec(rest - part, part, acc + (part,))

    rec(k, k, ())
    return out


def abelian_groups(n: int) -> list[FiniteGroup]:
    """One group per isomorphism type: choose a partition of each prime
    exponent, take cyclic factors p^part, and glue with direct products.
    Built via the group constructors, so every table is fully validated."""
    if n > 2000:
        raise ValueError("abelian enumeration limited to n <= 2000")
    fac = factorize(n)
    per_prime = []
    for p in sorted(fac):
        per_prime.append([tuple(p**part for part in pa) for pa in _partitions(fac[p])])
    out = []
    for combo in itertools.product(*per_prime):
        factors = [f for group_factors in combo for f in group_factors]
        g = cyclic(factors[0])
        for f in factors[1:]:
            g = direct_product(g, cyclic(f))
        out.append(g)
    # distinct invariant factors give distinct element-order statistics
    stats = [g.element_order_multiset() for g in out]
    assert len(set(stats)) == len(stats), "abelian types collided"
    return out


@dataclass
class OrderAnalysis:
    n: int
    factorization: dict[int, int]
    sylow_forced: dict[int, bool]
    sylow_counts: dict[int, list[int]]
    all_abelian: str
    abelian_types: list[str]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "factorization": {str(p): a for p, a in sorted(self.factorization.items())},
            "sylow_counts": {str(p): c for p, c in sorted(self.sylow_counts.items())},
            "sylow_forced": {str(p): f for p, f in sorted(self.sylow_forced.items())},
            "all_abelian": self.all_abelian,
            "abelian_types": self.abelian_types,
        }


def order_analysis(n: int) -> OrderAnalysis:
    fac = factorize(n)
    counts = {p: sylow_candidates(n, p) for p in fac}
    return OrderAnalysis(
        n=n,
        factorization=fac,
        sylow_forced={p: c == [1] for p, c in counts.items()},
        sylow_counts=counts,
        all_abelian=all_groups_abelian(n),
        abelian_types=[g.tag for g in abelian_groups(n)] if n <= 2000 else [],
    )


@dataclass
class ObstructionReport:
    """Structured inference chain concluding that the line graph of `root`
    cannot be a Cayley graph; `applicable` is False when a hypothesis of
    the argument fails (bipartite root, non-abelian order, |V| = |E|)."""

    applicable: bool
    conclusion: str  # "not_cayley" or ""
    reason: str
    steps: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "applicable": self.applicable,
            "conclusion": self.conclusion,
            "reason": self.reason,
            "steps": self.steps,
        }


def line_graph_abelian_obstruction(root: Graph) -> ObstructionReport:
    """If every group of order m = |E(root)| is abelian, root is regular,
    connected, non-bipartite and m != |V(root)|, then L(root) has no
    regular group of automorphisms: such a group would act edge-regularly
    on root, hence (non-bipartite) vertex-transitively, hence (abelian)
    vertex-regularly, forcing m = |V|."""
    if not is_connected(root):
        raise ValueError("root must be connected")
    degs = root.degrees()
    if root.n == 0 or not (degs == degs[0]).all():
        raise ValueError("root must be regular")
    n, m = root.n, root.m
    if (n, m) in ((2, 1), (4, 6)):
        raise ValueError(
            "K2 and K4 are excluded: their line graphs have a larger "
            "automorphism group than the root"
        )
    if bipartition(root) is not None:
        return ObstructionReport(False, "", "root is bipartite; edge-transitivity "
                                            "does not force vertex-transitivity")
    verdict = all_groups_abelian(m)
    if verdict != "yes":
        return ObstructionReport(
            False, "", f"groups of order {m} are not all abelian ({verdict})"
        )
    if n == m:
        return ObstructionReport(False, "", "|V| = |E|; a regular edge action "
                                            "could also be vertex-regular")
    steps = [
        f"a regular subgroup G of Aut(L(root)) has order |E(root)| = {m}",
        f"Aut(root) and Aut(L(root)) agree for connected regular roots other "
        f"than K2 and K4, so G acts regularly on the {m} edges of root",
        f"every group of order {m} is abelian "
        f"(factorization {factorize(m)}), so G is abelian",
        "root is regular, connected and not bipartite, so an edge-transitive "
        "group is vertex-transitive",
        "a transitive abelian permutation group acts regularly, so "
        f"|G| = |V(root)| = {n}",
        f"contradiction: |G| = {m} != {n}",
    ]
    return ObstructionReport(True, "not_cayley", "edge-regular abelian contradiction", steps)


@dataclass
class HkScan:
    n: int
    k: int
    witnesses: list[tuple[str, tuple[int, ...], tuple[int, ...]]]

    @property
    def impossible(self) -> bool:
        return not self.witnesses

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "impossible": self.impossible,
            "witnesses": [
                {"group": tag, "H": list(H), "K": list(K)} for tag, H, K in self.witnesses
            ],
        }


def hk_generation_scan(n: int, k: int) -> HkScan:
    """Over every group of order n (all abelian by precondition), test each
    pair of distinct order-k subgroups with trivial intersection for
    whether their union generates the whole group; an empty witness list
    proves no connected Cayley graph with S = (H u K) \\ {e} exists."""
    if all_groups_abelian(n) != "yes":
        raise ValueError(
            f"scan requires every group of order {n} to be abelian "
            f"(got {all_groups_abelian(n)!r}); the group list would be incomplete"
        )
    if n % k:
        raise ValueError(f"{k} does not divide {n}")
    witnesses = []
    for g in abelian_groups(n):
        subs = subgroups_of_order(g, k).subgroups
        for H, K in itertools.combinations(subs, 2):
            if H & K != {0}:
                continue
            if len(subgroup_closure(g, (H | K) - {0})) == n:
                witnesses.append((g.tag, tuple(sorted(H)), tuple(sorted(K))))
    return HkScan(n, k, witnesses)
