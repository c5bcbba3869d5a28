"""Spectra and the combinatorial regularity hierarchy.

Eigenvalues come from a threshold cyclic Jacobi iteration (jitted when
numba is importable); the intersection-array path is an independent
combinatorial cross-check whose quotient-matrix eigenvalues must reappear
in the spectrum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, all_pairs_distances, is_connected

__all__ = [
    "Spectrum",
    "SrgParams",
    "IntersectionArray",
    "spectrum",
    "srg_parameters",
    "intersection_array",
    "ia_eigenvalues",
    "least_eigenvalue_at_least",
]

ITER_TOL = 1e-10  # Jacobi stop: off-diagonal Frobenius norm below tol * scale
REPORT_TOL = 1e-6  # eigenvalue clustering / integrality detection


def _jacobi_numpy(a: np.ndarray, tol: float) -> np.ndarray:
    a = a.astype(np.float64).copy()
    n = a.shape[0]
    if n == 1:
        return np.diag(a).copy()
    scale = max(1.0, float(np.linalg.norm(a)))
    for _ in range(60):
        off = a - np.diag(np.diag(a))
        norm = float(np.linalg.norm(off))
        if norm < tol * scale:
            break
        thresh = norm / n
        for p in range(n - 1):
            row = a[p]
            for q in range(p + 1, n):
                apq = row[q]
                if abs(apq) < thresh * 1e-3:
                    continue
                app, aqq = a[p, p], a[q, q]
                tau = (aqq - app) / (2.0 * apq)
                t = 1.0 / (tau + math.sqrt(1.0 + tau * tau)) if tau >= 0 else \
                    -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rp = a[p].copy()
                rq = a[q].copy()
                a[p] = c * rp - s * rq
                a[q] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                row = a[p]
    return np.diag(a).copy()


try:  # pragma: no cover - exercised when numba is installed
    from numba import njit

    @njit(cache=True)
    def _jacobi_numba(a, tol):  # type: ignore[no-redef]
        n = a.shape[0]
        scale = 0.0
        for i in range(n):
            for j in range(n):
                scale += a[i, j] * a[i, j]
        scale = max(1.0, math.sqrt(scale))
        for _ in range(60):
            norm = 0.0
            for i in range(n):
                for j in range(n):
                    if i != j:
                        norm += a[i, j] * a[i, j]
            norm = math.sqrt(norm)
            if norm < tol * scale:
                break
            thresh = norm / n * 1e-3
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if abs(apq) < thresh:
                        continue
                    tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                    if tau >= 0:
                        t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                    c = 1.0 / math.sqrt(1.0 + t * t)
                    s = t * c
                    for k in range(n):
                        akp = a[p, k]
                        akq = a[q, k]
                        a[p, k] = c * akp - s * akq
                        a[q, k] = s * akp + c * akq
                    for k in range(n):
                        akp = a[k, p]
                        akq = a[k, q]
                        a[k, p] = c * akp - s * akq
                        a[k, q] = s * akp + c * akq
        out = np.empty(n)
        for i in range(n):
            out[i] = a[i, i]
        return out

    def _jacobi(a: np.ndarray, tol: float) -> np.ndarray:
        if a.shape[0] == 1:
            return np.diag(a).astype(np.float64).copy()
        return _jacobi_numba(a.astype(np.float64).copy(), tol)

except ImportError:  # pragma: no cover
    _jacobi = _jacobi_numpy


@dataclass
class Spectrum:
    """Clustered eigenvalues, descending, with multiplicities."""

    pairs: list[tuple[float, int]]

    @property
    def n(self) -> int:
        return sum(m for _, m in self.pairs)

    @property
    def least(self) -> float:
        return self.pairs[-1][0]

    @property
    def largest(self) -> float:
        return self.pairs[0][0]

    def values(self) -> list[float]:
        return [v for v, _ in self.pairs]

    def integral(self, tol: float = REPORT_TOL) -> bool:
        return all(abs(v - round(v)) < tol for v, _ in self.pairs)

    def to_json(self) -> list[list]:
        return [[round(v, 9), m] for v, m in self.pairs]

    def close_to(self, other: "Spectrum", tol: float = REPORT_TOL) -> bool:
        if len(self.pairs) != len(other.pairs):
            return False
        return all(
            m1 == m2 and abs(v1 - v2) <= tol
            for (v1, m1), (v2, m2) in zip(self.pairs, other.pairs)
        )


def spectrum(g: Graph, tol: float = ITER_TOL, cluster_tol: float = REPORT_TOL) -> Spectrum:
    """Adjacency spectrum via cyclic Jacobi sweeps, clustered within
    cluster_tol, in descending order."""
    if g.n == 0:
        return Spectrum([])
    vals = np.sort(_jacobi(g.adj.astype(np.float64), tol))[::-1]
    pairs: list[tuple[float, int]] = []
    run = [float(vals[0])]
    for v in vals[1:]:
        if abs(v - run[-1]) <= cluster_tol:
            run.append(float(v))
        else:
            pairs.append((float(np.mean(run)), len(run)))
            run = [float(v)]
    pairs.append((float(np.mean(run)), len(run)))
    assert sum(m for _, m in pairs) == g.n
    return Spectrum(pairs)


def least_eigenvalue_at_least(g: Graph, bound: float, tol: float = REPORT_TOL) -> bool:
    return spectrum(g).least >= bound - tol


@dataclass
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        # feasibility identity: counting paths of length 2 from a vertex
        assert self.k * (self.k - self.lam - 1) == (self.v - self.k - 1) * self.mu, (
            f"infeasible parameter set ({self.v},{self.k},{self.lam},{self.mu})"
        )

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.lam, self.mu)

    def to_json(self) -> dict:
        return {"v": self.v, "k": self.k, "lambda": self.lam, "mu": self.mu}


def srg_parameters(g: Graph) -> SrgParams | None:
    """Parameters iff g is connected, regular, of diameter 2, with constant
    common-neighbor counts on adjacent and on non-adjacent pairs. Complete
    and edgeless graphs are excluded by convention."""
    n = g.n
    if n < 2:
        return None
    degs = g.degrees()
    if not (degs == degs[0]).all():
        return None
    k = int(degs[0])
    if k == 0 or k == n - 1:
        return None  # edgeless / complete
    if not is_connected(g):
        return None
    a = g.adj.astype(np.int32)
    common = a @ a
    eye = np.eye(n, dtype=bool)
    lams = np.unique(common[g.adj])
    mus = np.unique(common[~g.adj & ~eye])
    if len(lams) != 1 or len(mus) != 1:
        return None
    if mus[0] == 0:
        return None  # diameter > 2
    return SrgParams(n, k, int(lams[0]), int(mus[0]))


@dataclass
class IntersectionArray:
    """{b_0..b_{d-1}; c_1..c_d} of a distance-regular graph."""

    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        assert len(self.b) == len(self.c), "b and c lengths must agree"
        assert self.c[0] == 1, "c_1 must be 1"
        assert all(x >= 0 for x in self.b + self.c)
        assert all(ai >= 0 for ai in self.a()), "negative a_i"

    @property
    def d(self) -> int:
        return len(self.b)

    @property
    def k(self) -> int:
        return self.b[0]

    def a(self) -> tuple[int, ...]:
        """a_i = k - b_i - c_i for i = 0..d (with b_d = 0, c_0 = 0)."""
        b = list(self.b) + [0]
        c = [0] + list(self.c)
        return tuple(self.k - b[i] - c[i] for i in range(self.d + 1))

    def quotient_matrix(self) -> np.ndarray:
        d = self.d
        q = np.zeros((d + 1, d + 1))
        a = self.a()
        for i in range(d + 1):
            q[i, i] = a[i]
            if i < d:
                q[i, i + 1] = self.b[i]
                q[i + 1, i] = self.c[i]
        return q

    def eigenvalues(self) -> list[float]:
        return ia_eigenvalues(self)

    def __str__(self) -> str:
        return "{%s; %s}" % (",".join(map(str, self.b)), ",".join(map(str, self.c)))

    def to_json(self) -> dict:
        return {"b": list(self.b), "c": list(self.c)}


def intersection_array(g: Graph) -> IntersectionArray | None:
    """The intersection array iff every count |G_{i-1}(x) n G(y)| etc. is
    independent of the pair (x, y) at distance i; checked over all pairs."""
    if not is_connected(g):
        raise ValueError("intersection array requires a connected graph")
    dist = all_pairs_distances(g)
    d = int(dist.max())
    a = g.adj.astype(np.float32)
    # counts[i][x, y] = number of neighbors of y at distance i from x
    level_counts = [((dist == i).astype(np.float32) @ a) for i in range(d + 2)]
    b, c = [], []
    for i in range(d + 1):
        at_i = dist == i
        if not at_i.any():
            return None
        ci = np.unique(level_counts[i - 1][at_i]) if i >= 1 else None
        bi = np.unique(level_counts[i + 1][at_i])
        ai = np.unique(level_counts[i][at_i])
        if len(bi) != 1 or len(ai) != 1 or (ci is not None and len(ci) != 1):
            return None
        if i < d:
            b.append(int(bi[0]))
        if i >= 1:
            c.append(int(ci[0]))
    return IntersectionArray(tuple(b), tuple(c))


def ia_eigenvalues(arr: IntersectionArray) -> list[float]:
    """Eigenvalues of the tridiagonal quotient matrix, descending.

    The matrix is similar to a symmetric tridiagonal one with off-diagonal
    entries sqrt(b_{i-1} c_i), so the Jacobi kernel applies.
    """
    d = arr.d
    sym = np.zeros((d + 1, d + 1))
    a = arr.a()
    for i in range(d + 1):
        sym[i, i] = a[i]
    for i in range(d):
        off = math.sqrt(arr.b[i] * arr.c[i])
        sym[i, i + 1] = sym[i + 1, i] = off
    vals = np.sort(_jacobi(sym, ITER_TOL))[::-1]
    return [float(v) for v in vals]
