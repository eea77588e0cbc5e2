"""Instance generators: extremal hosts, random-graph models, edge streams.

All randomness flows through :class:`RandomSource`, a thin wrapper over
numpy's PCG64 with splittable child seeding, so that (seed, parameters)
reproduce graphs bit-for-bit and concurrent trials each own an
independent stream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .graph import Graph

__all__ = [
    "RandomSource",
    "PerturbationSpec",
    "complete_bipartite",
    "two_cliques",
    "gnp",
    "gnm",
    "sample_edge_codes",
    "decode_edge_codes",
    "edge_stream",
    "couple_gnm_gnp",
    "pair_count",
]

_MASK64 = (1 << 64) - 1


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


class RandomSource:
    """Deterministic pseudorandom stream with splittable children.

    A child derived as ``src.child(i, j)`` seeds a fresh PCG64 from the
    sequence (seed, i, j); same seed and key always reproduce the same
    stream, and distinct keys give statistically independent streams.
    """

    __slots__ = ("seed", "key", "_gen")

    def __init__(self, seed: int, key: tuple[int, ...] = ()):
        self.seed = int(seed) & _MASK64
        self.key = tuple(int(k) & _MASK64 for k in key)
        self._gen: np.random.Generator | None = None

    @property
    def generator(self) -> np.random.Generator:
        if self._gen is None:
            ss = np.random.SeedSequence([self.seed, *self.key])
            self._gen = np.random.Generator(np.random.PCG64(ss))
        return self._gen

    def child(self, *indices: int) -> "RandomSource":
        return RandomSource(self.seed, self.key + indices)

    def __repr__(self) -> str:
        return f"RandomSource(seed={self.seed}, key={self.key})"


@dataclass(frozen=True)
class PerturbationSpec:
    """Which random perturbation to apply: binomial G(n,p) or uniform G(n,m)."""

    model: str  # "gnp" | "gnm"
    p: float | None = None
    m: int | None = None

    def __post_init__(self):
        if self.model == "gnp":
            if self.p is None or self.m is not None:
                raise ValueError("gnp model requires p and only p")
            if not 0.0 <= self.p <= 1.0:
                raise ValueError("p must lie in [0, 1]")
        elif self.model == "gnm":
            if self.m is None or self.p is not None:
                raise ValueError("gnm model requires m and only m")
            if self.m < 0:
                raise ValueError("m must be nonnegative")
        else:
            raise ValueError(f"unknown perturbation model {self.model!r}")

    def sample_codes(self, n: int, rng: RandomSource) -> np.ndarray:
        if self.model == "gnm":
            return sample_edge_codes(n, self.m, rng)
        gen = rng.generator
        iu, iv = _triu(n)
        mask = gen.random(iu.size) < self.p
        return (iu[mask] * n + iv[mask]).astype(np.int64)

    def sample(self, n: int, rng: RandomSource) -> Graph:
        return _graph_from_codes(n, self.sample_codes(n, rng))


# -- deterministic host families ------------------------------------------


def complete_bipartite(d: int, n: int) -> Graph:
    """K_{d, n-d} with parts A = {0..d-1} and B = {d..n-1}."""
    if not 1 <= d <= n - 1:
        raise ValueError(f"need 1 <= d <= n-1, got d={d}, n={n}")
    g = Graph(n)
    g._adj[:d, d:] = True
    g._adj[d:, :d] = True
    g._edge_count = d * (n - d)
    return g


def two_cliques(n: int, overlap: int) -> Graph:
    """Two cliques covering 0..n-1 and sharing `overlap` vertices.

    Clique sizes are n/2 + ceil(overlap/2) and n/2 + floor(overlap/2) so
    the union covers exactly n vertices.  overlap=0 gives two disjoint
    K_{n/2}; overlap=1 makes the shared vertex an articulation point.
    """
    if n % 2 != 0:
        raise ValueError("n must be even")
    if not 0 <= overlap <= n // 2:
        raise ValueError("overlap out of range")
    s1 = n // 2 + (overlap + 1) // 2
    s2 = n // 2 + overlap // 2
    g = Graph(n)
    g._adj[:s1, :s1] = True
    lo = s1 - overlap
    g._adj[lo : lo + s2, lo : lo + s2] = True
    np.fill_diagonal(g._adj, False)
    g._edge_count = int(np.count_nonzero(g._adj)) // 2
    return g


# -- random models ---------------------------------------------------------


@lru_cache(maxsize=8)
def _triu(n: int) -> tuple[np.ndarray, np.ndarray]:
    iu, iv = np.triu_indices(n, k=1)
    return iu.astype(np.int64), iv.astype(np.int64)


def _graph_from_codes(n: int, codes: np.ndarray) -> Graph:
    edges = decode_edge_codes(n, codes)
    g = Graph(n)
    if edges.size:
        g._adj[edges[:, 0], edges[:, 1]] = True
        g._adj[edges[:, 1], edges[:, 0]] = True
        g._edge_count = edges.shape[0]
        g._edge_cache = edges
    return g


def decode_edge_codes(n: int, codes: np.ndarray) -> np.ndarray:
    """Codes u*n+v (u < v) back to an (m, 2) edge array."""
    codes = np.asarray(codes, dtype=np.int64)
    return np.stack([codes // n, codes % n], axis=1)


def gnp(n: int, p: float, rng: RandomSource) -> Graph:
    """Binomial random graph: each pair present independently with prob p."""
    return PerturbationSpec("gnp", p=p).sample(n, rng)


_GNM_BATCH = 1024  # fixed batch so rng consumption is prefix-stable in m


def sample_edge_codes(n: int, m: int, rng: RandomSource) -> np.ndarray:
    """Codes (u*n+v, u<v) of a uniform m-subset of the n(n-1)/2 pairs.

    For sparse m this is rejection sampling of distinct pairs, which also
    makes draws at m1 < m2 share a prefix under the same stream (the
    monotone coupling the experiment harness relies on).  Dense m falls
    back to a partial shuffle of the full pair space.
    """
    total = pair_count(n)
    if not 0 <= m <= total:
        raise ValueError(f"m={m} outside [0, {total}]")
    if m == 0:
        return np.empty(0, dtype=np.int64)
    gen = rng.generator
    if m > total // 4:
        iu, iv = _triu(n)
        idx = gen.permutation(total)[:m]
        return iu[idx] * n + iv[idx]
    seen: set[int] = set()
    out: list[int] = []
    while len(out) < m:
        batch = gen.integers(0, n, size=(_GNM_BATCH, 2))
        for a, b in batch:
            if a == b:
                continue
            code = int(a * n + b) if a < b else int(b * n + a)
            if code in seen:
                continue
            seen.add(code)
            out.append(code)
            if len(out) == m:
                break
    return np.array(out, dtype=np.int64)


def gnm(n: int, m: int, rng: RandomSource) -> Graph:
    """Uniform random graph with exactly m edges."""
    return _graph_from_codes(n, sample_edge_codes(n, m, rng))


def edge_stream(n: int, rng: RandomSource) -> Iterator[tuple[int, int]]:
    """Unbounded i.i.d. uniform edges of K_n, sampled with replacement."""
    if n < 2:
        raise ValueError("edge stream needs n >= 2")
    gen = rng.generator
    while True:
        batch = gen.integers(0, n, size=(256, 2))
        for a, b in batch:
            if a == b:
                continue
            yield (int(a), int(b)) if a < b else (int(b), int(a))


def couple_gnm_gnp(
    n: int, m: int, delta: float, rng: RandomSource
) -> tuple[Graph, Graph, bool]:
    """Couple G_{n,m} inside G(n,p) with p = (1+delta) * m / C(n,2).

    Returns (g1, g2, coupled): g2 ~ G(n,p); when g2 has at least m edges,
    g1 is a uniform m-subset of them and the coupling succeeded.  The
    marginal of g1 is exactly G_{n,m} either way.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if delta <= 0:
        raise ValueError("delta must be positive")
    total = pair_count(n)
    p = min(1.0, (1.0 + delta) * m / total)
    g2 = gnp(n, p, rng)
    if g2.edge_count >= m:
        edges = g2.edge_array()
        idx = rng.generator.permutation(edges.shape[0])[:m]
        sub = edges[idx]
        g1 = _graph_from_codes(n, sub[:, 0] * n + sub[:, 1])
        return g1, g2, True
    g1 = gnm(n, m, rng)
    return g1, g2, False


def eta_value(n: int, d: int) -> float:
    """Deficiency below the Dirac bound: n/2 - d (half-integer when n odd)."""
    return (n - 2 * d) / 2.0


def default_m0(n: int) -> int:
    """Initial sprinkle size; any slowly growing unbounded function works."""
    return max(3, math.ceil(math.log2(max(2.0, math.log2(max(4, n))))))
