"""Maximum-cardinality matching in general graphs (blossom contraction).

Classic array-based Edmonds algorithm: repeated alternating-tree BFS
with blossom bases tracked per vertex, seeded by a greedy matching.
Perturbed hosts are not bipartite, so a general matcher is required.
Runs per connected component, which keeps the sparse-perturbation
workloads (tiny components) cheap.
"""

from __future__ import annotations

from collections import deque

import numpy as np

__all__ = ["max_matching_partner", "max_matching_size_from_edges"]


def _greedy(n: int, adj: list[list[int]], match: list[int]) -> None:
    for v in range(n):
        if match[v] != -1:
            continue
        for w in adj[v]:
            if match[w] == -1:
                match[v] = w
                match[w] = v
                break


def _find_augmenting(n: int, adj: list[list[int]], match: list[int], root: int) -> bool:
    p = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    q = deque([root])

    def lca(a: int, b: int) -> int:
        mark = [False] * n
        while True:
            a = base[a]
            mark[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if mark[b]:
                return b
            b = p[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    while q:
        v = q.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and p[match[to]] != -1):
                # odd cycle: contract the blossom around the common base
                curbase = lca(v, to)
                blossom = [False] * n
                mark_path(v, curbase, to, blossom)
                mark_path(to, curbase, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = curbase
                        if not used[i]:
                            used[i] = True
                            q.append(i)
            elif p[to] == -1:
                p[to] = v
                if match[to] == -1:
                    # augment along the tree path back to the root
                    u = to
                    while u != -1:
                        pv = p[u]
                        ppv = match[pv]
                        match[u] = pv
                        match[pv] = u
                        u = ppv
                    return True
                used[match[to]] = True
                q.append(match[to])
    return False


def max_matching_partner(n: int, adj: list[list[int]]) -> np.ndarray:
    """Partner array of a maximum matching (-1 for unmatched vertices)."""
    match = [-1] * n
    _greedy(n, adj, match)
    for v in range(n):
        if match[v] == -1:
            _find_augmenting(n, adj, match, v)
    return np.array(match, dtype=np.int64)


def max_matching_size_from_edges(edges: np.ndarray) -> int:
    """Maximum matching size of the graph spanned by an edge array.

    Vertices are relabeled per connected component, so the ambient
    vertex count is irrelevant; isolated vertices cannot contribute.
    """
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    if edges.shape[0] == 0:
        return 0
    verts = np.unique(edges)
    index = {int(v): i for i, v in enumerate(verts)}
    k = len(verts)
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    local_edges = [(index[int(u)], index[int(v)]) for u, v in edges]
    for u, v in local_edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    comp_edges: dict[int, list[tuple[int, int]]] = {}
    for u, v in local_edges:
        comp_edges.setdefault(find(u), []).append((u, v))

    total = 0
    for es in comp_edges.values():
        cverts = sorted({x for e in es for x in e})
        cindex = {v: i for i, v in enumerate(cverts)}
        cn = len(cverts)
        adj: list[list[int]] = [[] for _ in range(cn)]
        for u, v in es:
            adj[cindex[u]].append(cindex[v])
            adj[cindex[v]].append(cindex[u])
        partner = max_matching_partner(cn, adj)
        total += int((partner >= 0).sum()) // 2
    return total
