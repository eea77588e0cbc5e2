"""Simple undirected graphs on dense integer vertex ids 0..n-1.

Adjacency is a packed boolean matrix so edge membership is O(1) and
neighbor iteration is a numpy row scan; this is what makes the
quadratic pair probes in the boost-set builders affordable.

Graphs are treated as read-only once handed to an oracle or a trial
worker; mutation happens only through ``add_edge`` on a graph owned by
a single generator or sprinkle run.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "Graph",
    "union",
    "min_degree",
    "is_connected",
    "is_2_connected",
    "articulation_points",
    "read_edge_list",
    "write_edge_list",
    "normalize_edge",
]


def normalize_edge(u: int, v: int) -> tuple[int, int]:
    """Order an edge as (min, max), rejecting self-loops."""
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph with O(1) edge queries."""

    __slots__ = ("n", "_adj", "_edge_count", "_edge_cache")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] | np.ndarray | None = None):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        self.n = int(n)
        self._adj = np.zeros((n, n), dtype=bool)
        self._edge_count = 0
        self._edge_cache: np.ndarray | None = None
        if edges is not None:
            arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
            if arr.size:
                self._add_edge_array(arr)

    def _add_edge_array(self, arr: np.ndarray) -> None:
        arr = arr.reshape(-1, 2)
        u, v = arr[:, 0], arr[:, 1]
        if (u == v).any():
            raise ValueError("self-loop in edge list")
        if (arr < 0).any() or (arr >= self.n).any():
            raise ValueError("vertex id out of range")
        lo, hi = np.minimum(u, v), np.maximum(u, v)
        codes = lo * self.n + hi
        if np.unique(codes).size != codes.size or self._adj[lo, hi].any():
            raise ValueError("duplicate edge")
        self._adj[lo, hi] = True
        self._adj[hi, lo] = True
        self._edge_count += arr.shape[0]
        self._edge_cache = np.stack([lo, hi], axis=1).astype(np.int64)

    # -- queries ---------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u, v])

    @property
    def adjacency(self) -> np.ndarray:
        """The boolean adjacency matrix. Do not mutate."""
        return self._adj

    def neighbors(self, v: int) -> np.ndarray:
        return np.flatnonzero(self._adj[v])

    def degree(self, v: int) -> int:
        return int(self._adj[v].sum())

    def degrees(self) -> np.ndarray:
        return self._adj.sum(axis=1)

    def edge_array(self) -> np.ndarray:
        """All edges as an (m, 2) array with u < v, sorted lexicographically."""
        if self._edge_cache is None or len(self._edge_cache) != self._edge_count:
            iu, iv = np.nonzero(np.triu(self._adj))
            self._edge_cache = np.stack([iu, iv], axis=1).astype(np.int64)
        order = np.lexsort((self._edge_cache[:, 1], self._edge_cache[:, 0]))
        self._edge_cache = self._edge_cache[order]
        return self._edge_cache

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, v in self.edge_array():
            yield int(u), int(v)

    def adjacency_bits(self) -> np.ndarray:
        """Neighborhoods as int64 bitmasks; only valid for n <= 62."""
        if self.n > 62:
            raise ValueError("bitmask adjacency limited to n <= 62")
        weights = (1 << np.arange(self.n, dtype=np.int64))
        return (self._adj * weights).sum(axis=1).astype(np.int64)

    def adjacency_lists(self) -> list[np.ndarray]:
        return [np.flatnonzero(self._adj[v]) for v in range(self.n)]

    # -- mutation (single-owner builder path) ----------------------------

    def add_edge(self, u: int, v: int) -> None:
        u, v = normalize_edge(int(u), int(v))
        if not (0 <= u and v < self.n):
            raise ValueError("vertex id out of range")
        if self._adj[u, v]:
            raise ValueError(f"edge ({u}, {v}) already present")
        self._adj[u, v] = True
        self._adj[v, u] = True
        self._edge_count += 1
        self._edge_cache = None

    def copy(self) -> "Graph":
        g = Graph.__new__(Graph)
        g.n = self.n
        g._adj = self._adj.copy()
        g._edge_count = self._edge_count
        g._edge_cache = self._edge_cache
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and bool((self._adj == other._adj).all())

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self._edge_count})"


def union(g: Graph, h: Graph) -> Graph:
    """Graph with edge set E(g) | E(h); vertex counts must match."""
    if g.n != h.n:
        raise ValueError(f"vertex count mismatch: {g.n} != {h.n}")
    out = Graph.__new__(Graph)
    out.n = g.n
    out._adj = g._adj | h._adj
    out._edge_count = int(np.count_nonzero(out._adj)) // 2
    out._edge_cache = None
    return out


def min_degree(g: Graph) -> int:
    return int(g.degrees().min())


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    seen = np.zeros(g.n, dtype=bool)
    stack = [0]
    seen[0] = True
    adj = g.adjacency
    while stack:
        v = stack.pop()
        nbrs = np.flatnonzero(adj[v] & ~seen)
        seen[nbrs] = True
        stack.extend(nbrs.tolist())
    return bool(seen.all())


def articulation_points(g: Graph) -> list[int]:
    """Cut vertices via an iterative lowpoint DFS. Assumes g connected."""
    n = g.n
    adj = [g.neighbors(v).tolist() for v in range(n)]
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cuts: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        root_children = 0
        stack: list[tuple[int, int]] = [(root, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, i = stack[-1]
            if i < len(adj[v]):
                stack[-1] = (v, i + 1)
                w = adj[v][i]
                if disc[w] == -1:
                    parent[w] = v
                    if v == root:
                        root_children += 1
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, 0))
                elif w != parent[v]:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                p = parent[v]
                if p != -1:
                    low[p] = min(low[p], low[v])
                    if p != root and low[v] >= disc[p]:
                        cuts.add(p)
        if root_children > 1:
            cuts.add(root)
    return sorted(cuts)


def is_2_connected(g: Graph) -> bool:
    """Connected with no cut vertex; rejects n < 3 outright."""
    if g.n < 3:
        raise ValueError("2-connectivity requires at least 3 vertices")
    return is_connected(g) and not articulation_points(g)


# -- edge-list text format: first line "n m", then one "u v" per line ----


def write_edge_list(g: Graph, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(f"{g.n} {g.edge_count}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")


def read_edge_list(path: str) -> Graph:
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) != 2:
            raise ValueError("expected header line 'n <edge count>'")
        n, m = int(header[0]), int(header[1])
        g = Graph(n)
        count = 0
        for line in fh:
            line = line.strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"malformed edge line: {line!r}")
            g.add_edge(int(parts[0]), int(parts[1]))
            count += 1
    if count != m:
        raise ValueError(f"header promised {m} edges, found {count}")
    return g
