"""Exact ground-truth predicates at desk scale.

The subset DP solvers are capped (n <= 24 for cycles, n <= 20 for
pancyclicity, 30-vertex components for linear forests) and raise
:class:`CapacityError` beyond; the extremal-family predicates are the
fast exact route that makes the n ~ 2000 experiments feasible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .graph import Graph, normalize_edge
from .matching import max_matching_partner, max_matching_size_from_edges

__all__ = [
    "CapacityError",
    "CycleCert",
    "MatchingCert",
    "hamiltonian_exact",
    "longest_cycle_exact",
    "cycle_lengths_exact",
    "pancyclic_exact",
    "max_matching",
    "max_linear_forest",
    "max_linear_forest_size",
    "extremal_ham_predicate",
    "extremal_pm_predicate",
    "HAMILTONIAN_CAP",
    "PANCYCLIC_CAP",
    "LINEAR_FOREST_COMPONENT_CAP",
]

HAMILTONIAN_CAP = 24
PANCYCLIC_CAP = 20
LINEAR_FOREST_COMPONENT_CAP = 30


class CapacityError(Exception):
    """Input exceeds an exact solver's size cap."""


@dataclass(frozen=True)
class CycleCert:
    """A cycle as a cyclic vertex sequence."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def validate(self, g: Graph) -> None:
        vs = self.vertices
        if len(vs) < 3:
            raise ValueError("cycle needs at least 3 vertices")
        if len(set(vs)) != len(vs):
            raise ValueError("repeated vertex in cycle")
        for i, v in enumerate(vs):
            if not g.has_edge(v, vs[(i + 1) % len(vs)]):
                raise ValueError(f"missing cycle edge ({v}, {vs[(i + 1) % len(vs)]})")


@dataclass(frozen=True)
class MatchingCert:
    """A set of pairwise disjoint edges with the induced partner map."""

    pairs: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.pairs)

    @property
    def partner(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for u, v in self.pairs:
            out[u] = v
            out[v] = u
        return out

    def partner_array(self, n: int) -> np.ndarray:
        arr = np.full(n, -1, dtype=np.int64)
        for u, v in self.pairs:
            arr[u] = v
            arr[v] = u
        return arr

    def validate(self, g: Graph) -> None:
        seen: set[int] = set()
        for u, v in self.pairs:
            if u == v or (u, v) != normalize_edge(u, v):
                raise ValueError(f"malformed pair ({u}, {v})")
            if u in seen or v in seen:
                raise ValueError(f"vertex reused by pair ({u}, {v})")
            if not g.has_edge(u, v):
                raise ValueError(f"pair ({u}, {v}) not an edge")
            seen.update((u, v))

    @staticmethod
    def from_partner(partner: np.ndarray) -> "MatchingCert":
        pairs = frozenset(
            (int(u), int(p)) for u, p in enumerate(partner) if p >= 0 and u < p
        )
        return MatchingCert(pairs)


# -- subset DP over anchored simple paths ----------------------------------


@lru_cache(maxsize=4)
def _popcount_table(bits: int) -> np.ndarray:
    pc = np.zeros(1 << bits, dtype=np.uint8)
    for i in range(bits):
        pc[1 << i : 2 << i] = pc[: 1 << i] + 1
    return pc


def _suffix_bits(adj_bits: np.ndarray, a: int, n: int) -> np.ndarray:
    """Adjacency bitmasks of the induced subgraph on {a..n-1}, relabeled to 0.."""
    mask = (1 << (n - a)) - 1
    return np.array([(int(adj_bits[i]) >> a) & mask for i in range(a, n)], dtype=np.int64)


def _walk_back(dp: np.ndarray, adj_bits: np.ndarray, mask: int, end: int) -> list[int]:
    """Recover a path 0..end covering `mask` from the DP table (reversed)."""
    path = []
    u = end
    while mask != 1:
        path.append(u)
        mask ^= 1 << u
        cand = int(dp[mask]) & int(adj_bits[u])
        u = (cand & -cand).bit_length() - 1
    path.append(0)
    return path


def hamiltonian_exact(g: Graph) -> CycleCert | None:
    """Hamilton cycle certificate via subset DP anchored at vertex 0."""
    n = g.n
    if n < 3:
        raise ValueError("Hamiltonicity needs n >= 3")
    if n > HAMILTONIAN_CAP:
        raise CapacityError(f"exact Hamiltonicity capped at n <= {HAMILTONIAN_CAP}")
    adj_bits = g.adjacency_bits()
    dp = kernels.path_dp(adj_bits)
    full = (1 << n) - 1
    ends = int(dp[full]) & int(adj_bits[0])
    if ends == 0:
        return None
    end = (ends & -ends).bit_length() - 1
    cert = CycleCert(tuple(_walk_back(dp, adj_bits, full, end)))
    cert.validate(g)
    return cert


def _anchored_scan(g: Graph, cap: int, collect_lengths: bool):
    n = g.n
    if n > cap:
        raise CapacityError(f"exact cycle search capped at n <= {cap}")
    adj_bits = g.adjacency_bits()
    best = (0, -1, 0, 0)  # (length, anchor, mask, end)
    lengths: set[int] = set()
    for a in range(n - 2):
        k = n - a
        if not collect_lengths and best[0] >= k:
            break
        sub = _suffix_bits(adj_bits, a, n)
        anchor_adj = int(sub[0])
        if anchor_adj == 0:
            continue
        dp = kernels.path_dp(sub)
        hit = np.flatnonzero((dp & anchor_adj) != 0)
        if hit.size == 0:
            continue
        pcs = _popcount_table(k)[hit]
        ok = pcs >= 3
        if not ok.any():
            continue
        hit, pcs = hit[ok], pcs[ok]
        if collect_lengths:
            lengths.update(int(x) for x in np.unique(pcs))
        j = int(np.argmax(pcs))
        if int(pcs[j]) > best[0]:
            ends = int(dp[hit[j]]) & anchor_adj
            best = (int(pcs[j]), a, int(hit[j]), (ends & -ends).bit_length() - 1)
    return best, lengths


def longest_cycle_exact(g: Graph) -> CycleCert:
    """Maximum-length cycle certificate (n <= 24); errors on acyclic input."""
    best, _ = _anchored_scan(g, HAMILTONIAN_CAP, collect_lengths=False)
    length, a, mask, end = best
    if length == 0:
        raise ValueError("graph contains no cycle")
    adj_bits = g.adjacency_bits()
    sub = _suffix_bits(adj_bits, a, g.n)
    dp = kernels.path_dp(sub)
    path = [p + a for p in _walk_back(dp, sub, mask, end)]
    cert = CycleCert(tuple(path))
    cert.validate(g)
    return cert


def cycle_lengths_exact(g: Graph, cap: int = PANCYCLIC_CAP) -> set[int]:
    """All cycle lengths present in g (exact, n <= cap)."""
    _, lengths = _anchored_scan(g, cap, collect_lengths=True)
    return lengths


def pancyclic_exact(g: Graph) -> bool:
    """True iff g has a cycle of every length 3..n (n <= 20)."""
    if g.n < 3:
        raise ValueError("pancyclicity needs n >= 3")
    lengths = cycle_lengths_exact(g, PANCYCLIC_CAP)
    return all(length in lengths for length in range(3, g.n + 1))


# -- matchings --------------------------------------------------------------


def max_matching(g: Graph) -> MatchingCert:
    """Maximum-cardinality matching certificate (blossom algorithm)."""
    adj = [g.neighbors(v).tolist() for v in range(g.n)]
    partner = max_matching_partner(g.n, adj)
    cert = MatchingCert.from_partner(partner)
    cert.validate(g)
    return cert


# -- linear forests ----------------------------------------------------------


def _component_edge_groups(edges: np.ndarray) -> list[list[tuple[int, int]]]:
    verts = np.unique(edges)
    index = {int(v): i for i, v in enumerate(verts)}
    parent = list(range(len(verts)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pairs = [(index[int(u)], index[int(v)]) for u, v in edges]
    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[tuple[int, int]]] = {}
    for (u, v), (gu, gv) in zip(pairs, edges.tolist()):
        groups.setdefault(find(u), []).append((gu, gv))
    return list(groups.values())


def _max_linear_forest_component(es: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Exact max linear forest of one connected component (branch and bound)."""
    cverts = sorted({x for e in es for x in e})
    if len(cverts) > LINEAR_FOREST_COMPONENT_CAP:
        raise CapacityError(
            f"linear-forest component exceeds {LINEAR_FOREST_COMPONENT_CAP} vertices"
        )
    cindex = {v: i for i, v in enumerate(cverts)}
    nv = len(cverts)
    m = len(es)
    local = [(cindex[u], cindex[v]) for u, v in es]
    deg = [0] * nv
    parent = list(range(nv))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    best: list[int] = []
    chosen: list[int] = []

    def rec(i: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen.copy()
        if len(best) == nv - 1 or i == m or len(chosen) + (m - i) <= len(best):
            return
        u, v = local[i]
        if deg[u] < 2 and deg[v] < 2:
            ru, rv = find(u), find(v)
            if ru != rv:
                deg[u] += 1
                deg[v] += 1
                parent[ru] = rv
                chosen.append(i)
                rec(i + 1)
                chosen.pop()
                parent[ru] = ru
                deg[u] -= 1
                deg[v] -= 1
        rec(i + 1)

    rec(0)
    return [es[i] for i in best]


def max_linear_forest(g: Graph) -> list[tuple[int, int]]:
    """Maximum edge set whose components are vertex-disjoint paths."""
    edges = g.edge_array()
    if edges.shape[0] == 0:
        return []
    out: list[tuple[int, int]] = []
    for es in _component_edge_groups(edges):
        out.extend(_max_linear_forest_component(es))
    return out


def max_linear_forest_size(edges: np.ndarray) -> int:
    """Max linear-forest size of the graph spanned by an edge array."""
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    if edges.shape[0] == 0:
        return 0
    return sum(
        len(_max_linear_forest_component(es)) for es in _component_edge_groups(edges)
    )


# -- extremal-family predicates ---------------------------------------------
#
# For the host K_{d, n-d} with parts A = {0..d-1}, B = {d..n-1}, both
# spanning properties of K_{d,n-d} union r reduce to a condition on the
# perturbation restricted to B: a Hamilton cycle needs a linear forest of
# n-2d edges inside B (any such forest splits B into exactly d paths that
# interleave with A), and a perfect matching needs n/2-d edges inside B
# (A absorbs any d of the remaining B vertices).  Edges of r incident to
# A are irrelevant since A is already complete towards B.


def _b_side_edges(d: int, r: Graph) -> np.ndarray:
    edges = r.edge_array()
    if edges.shape[0] == 0:
        return edges
    return edges[(edges[:, 0] >= d) & (edges[:, 1] >= d)]


def extremal_ham_predicate(n: int, d: int, r: Graph) -> bool:
    """Hamiltonicity of K_{d,n-d} union r, decided inside part B."""
    if 2 * d > n:
        raise ValueError("predicate requires d <= n/2")
    if r.n != n:
        raise ValueError("perturbation graph must live on the same n vertices")
    need = n - 2 * d
    if need <= 0:
        return True
    return max_linear_forest_size(_b_side_edges(d, r)) >= need


def extremal_pm_predicate(n: int, d: int, r: Graph) -> bool:
    """Perfect-matching existence in K_{d,n-d} union r, decided inside B."""
    if n % 2 != 0:
        raise ValueError("perfect matchings require even n")
    if 2 * d > n:
        raise ValueError("predicate requires d <= n/2")
    if r.n != n:
        raise ValueError("perturbation graph must live on the same n vertices")
    need = n // 2 - d
    if need <= 0:
        return True
    return max_matching_size_from_edges(_b_side_edges(d, r)) >= need
