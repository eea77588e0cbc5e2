"""Cycle and matching augmentation: boost sets and the sprinkling process.

A "boost edge" is a non-edge whose addition permits an explicit
one-vertex enlargement of the current cycle (via a stuck off-cycle
witness) or of the current matching (via an unmatched pair).  The
sprinkling drivers draw uniform random edges with replacement, counting
every draw, until one lands in the current boost set, then apply the
recorded recipe; free moves that need no random edges are always
exhausted first and never consume samples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from .graph import Graph, is_2_connected, min_degree
from .matching import max_matching_partner
from .models import (
    RandomSource,
    default_m0,
    decode_edge_codes,
    edge_stream,
    sample_edge_codes,
)
from .oracles import (
    HAMILTONIAN_CAP,
    CycleCert,
    MatchingCert,
    longest_cycle_exact,
)

__all__ = [
    "OrientedCycle",
    "BoostSet",
    "SprinkleConfig",
    "SprinkleRound",
    "SprinkleTrace",
    "LongCycleError",
    "build_oriented_cycle",
    "free_insertion",
    "exchange_extension",
    "cycle_boost_set",
    "apply_cycle_boost",
    "matching_boost_set",
    "apply_matching_boost",
    "find_long_cycle",
    "sprinkle_hamiltonian",
    "sprinkle_pm",
]


class LongCycleError(Exception):
    """find_long_cycle could not reach the requested length."""


class OrientedCycle:
    """Cyclic vertex sequence with O(1) successor/predecessor lookups."""

    __slots__ = ("n", "order", "pos")

    def __init__(self, n: int, order: np.ndarray):
        self.n = n
        self.order = np.asarray(order, dtype=np.int64)
        self.pos = np.full(n, -1, dtype=np.int64)
        self.pos[self.order] = np.arange(self.order.size)

    @property
    def length(self) -> int:
        return int(self.order.size)

    def contains(self, v: int) -> bool:
        return self.pos[v] >= 0

    def succ(self, v: int) -> int:
        return int(self.order[(self.pos[v] + 1) % self.order.size])

    def pred(self, v: int) -> int:
        return int(self.order[(self.pos[v] - 1) % self.order.size])

    def off_cycle(self) -> np.ndarray:
        return np.flatnonzero(self.pos < 0)

    def to_cert(self) -> CycleCert:
        return CycleCert(tuple(int(v) for v in self.order))

    def validate(self, g: Graph) -> None:
        self.to_cert().validate(g)

    def __repr__(self) -> str:
        return f"OrientedCycle(length={self.length})"


def build_oriented_cycle(g: Graph, vertices: Sequence[int]) -> OrientedCycle:
    """Wrap a vertex sequence as an oriented cycle, validating it against g."""
    c = OrientedCycle(g.n, np.asarray(list(vertices), dtype=np.int64))
    if len(set(int(v) for v in c.order)) != c.length:
        raise ValueError("repeated vertex in cycle sequence")
    c.validate(g)
    return c


# -- single-vertex enlargements using only existing edges -------------------


def _cycle_neighbor_mask(g: Graph, c: OrientedCycle, v: int) -> np.ndarray:
    return g.adjacency[v][c.order]


def _witness_positions(mark: np.ndarray) -> np.ndarray:
    """Positions p with order[p] not a neighbor but both cyclic neighbors are."""
    return np.flatnonzero(~mark & np.roll(mark, 1) & np.roll(mark, -1))


def free_insertion(g: Graph, c: OrientedCycle, v: int) -> OrientedCycle | None:
    """Insert v between two cyclically consecutive neighbors, if any."""
    if c.contains(v):
        raise ValueError(f"vertex {v} already on the cycle")
    mark = _cycle_neighbor_mask(g, c, v)
    hits = np.flatnonzero(mark & np.roll(mark, 1))
    if hits.size == 0:
        return None
    p = int(hits[0])
    new_order = np.insert(c.order, p, v)
    c2 = OrientedCycle(c.n, new_order)
    c2.validate(g)
    return c2


def _splice(c: OrientedCycle, pw: int, pu: int, v: int) -> OrientedCycle:
    """Rebuild the cycle as arc(w+ .. u-), w, arc(u .. w-), v.

    Handles the single-vertex degenerate arcs (u- = w+ and u = w-).
    """
    order, L = c.order, c.length
    len1 = (pu - pw - 2) % L + 1
    len2 = (pw - pu - 1) % L + 1
    arc1 = order[(np.arange(len1) + pw + 1) % L]
    arc2 = order[(np.arange(len2) + pu) % L]
    new_order = np.concatenate([arc1, [order[pw]], arc2, [v]])
    return OrientedCycle(c.n, new_order)


def exchange_extension(g: Graph, c: OrientedCycle, v: int) -> OrientedCycle | None:
    """Enlarge the cycle through a witness w and an interior chord of w."""
    if c.contains(v):
        raise ValueError(f"vertex {v} already on the cycle")
    mark = _cycle_neighbor_mask(g, c, v)
    wpos = _witness_positions(mark)
    pw, pu = kernels.find_exchange(g.adjacency, c.order, wpos)
    if pw < 0:
        return None
    c2 = _splice(c, int(pw), int(pu), v)
    c2.validate(g)
    return c2


# -- boost sets --------------------------------------------------------------


@dataclass
class BoostSet:
    """Candidate non-edges, each paired with an augmentation recipe.

    ``codes`` are sorted u*n+v keys (u < v); ``tag_a``/``tag_b`` carry the
    recipe parameters aligned with codes: (w, u) for cycle boosts and
    (x, y) for matching boosts.
    """

    kind: str  # "cycle" | "matching"
    witness: tuple[int, ...]
    n: int
    codes: np.ndarray
    tag_a: np.ndarray
    tag_b: np.ndarray

    @property
    def size(self) -> int:
        return int(self.codes.size)

    def _index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        code = u * self.n + v
        i = int(np.searchsorted(self.codes, code))
        if i < self.codes.size and self.codes[i] == code:
            return i
        return -1

    def contains(self, u: int, v: int) -> bool:
        return self._index(u, v) >= 0

    def tag_for(self, u: int, v: int) -> tuple[int, ...]:
        i = self._index(u, v)
        if i < 0:
            raise KeyError(f"edge ({u}, {v}) not in boost set")
        if self.kind == "cycle":
            return (self.witness[0], int(self.tag_a[i]), int(self.tag_b[i]))
        return (self.witness[0], int(self.tag_a[i]), self.witness[1], int(self.tag_b[i]))

    def items(self) -> Iterator[tuple[tuple[int, int], tuple[int, ...]]]:
        for i in range(self.codes.size):
            code = int(self.codes[i])
            u, v = code // self.n, code % self.n
            if self.kind == "cycle":
                tag = (self.witness[0], int(self.tag_a[i]), int(self.tag_b[i]))
            else:
                tag = (self.witness[0], int(self.tag_a[i]), self.witness[1], int(self.tag_b[i]))
            yield (u, v), tag


def cycle_boost_set(g: Graph, c: OrientedCycle, v: int) -> BoostSet:
    """All non-edges {w, u-} whose addition lets v join the cycle.

    Requires that no free insertion or exchange extension applies to v;
    under that local maximality every listed edge's recipe is guaranteed
    to produce a cycle one longer.
    """
    if c.contains(v):
        raise ValueError(f"vertex {v} already on the cycle")
    mark = _cycle_neighbor_mask(g, c, v)
    if (mark & np.roll(mark, 1)).any():
        raise ValueError("free insertion available; boost set undefined")
    wpos = _witness_positions(mark)
    pw, _ = kernels.find_exchange(g.adjacency, c.order, wpos)
    if pw >= 0:
        raise ValueError("exchange extension available; boost set undefined")
    w_arr, u_arr, x_arr = kernels.cycle_boost_pairs(g.adjacency, c.order, wpos)
    lo = np.minimum(w_arr, x_arr)
    hi = np.maximum(w_arr, x_arr)
    codes, first = np.unique(lo * g.n + hi, return_index=True)
    return BoostSet(
        kind="cycle",
        witness=(int(v),),
        n=g.n,
        codes=codes,
        tag_a=w_arr[first],
        tag_b=u_arr[first],
    )


def apply_cycle_boost(
    g: Graph, c: OrientedCycle, tag: tuple[int, int, int], *, copy: bool = True
) -> tuple[Graph, OrientedCycle]:
    """Add the boost edge {w, u-} and rebuild the cycle with v inserted."""
    v, w, u = tag
    if c.contains(v) or not c.contains(w) or not c.contains(u):
        raise ValueError("stale tag: cycle membership changed")
    pw, pu = int(c.pos[w]), int(c.pos[u])
    x = int(c.order[(pu - 1) % c.length])
    w_pred = int(c.order[(pw - 1) % c.length])
    w_succ = int(c.order[(pw + 1) % c.length])
    # degenerate offset u- = w+: the "boost edge" {w, u-} is the cycle edge
    # {w, w+} itself, so it is legitimately present already
    if g.has_edge(w, x) and x != w_succ:
        raise ValueError("stale tag: boost edge already present")
    if not (g.has_edge(w_pred, v) and g.has_edge(v, w_succ) and g.has_edge(w, u)):
        raise ValueError("stale tag: recipe edges missing")
    g2 = g.copy() if copy else g
    if not g2.has_edge(w, x):
        g2.add_edge(w, x)
    c2 = _splice(c, pw, pu, v)
    c2.validate(g2)
    if c2.length != c.length + 1:
        raise AssertionError("boost did not enlarge the cycle by one")
    return g2, c2


def _matched_neighbors(adjm: np.ndarray, partner: np.ndarray, u: int) -> np.ndarray:
    """Matched vertices whose partner is adjacent to u."""
    matched = np.flatnonzero(partner >= 0)
    if matched.size == 0:
        return matched
    return matched[adjm[u, partner[matched]]]


def _short_augmenting_path(
    adjm: np.ndarray, partner: np.ndarray, u: int, v: int
) -> tuple | None:
    """An augmenting path of length 1, 3 or 5 between unmatched u and v."""
    if adjm[u, v]:
        return ("edge", u, v)
    matched = np.flatnonzero(partner >= 0)
    direct = matched[adjm[u, matched]]
    if direct.size and adjm[partner[direct], v].any():
        w = int(direct[np.flatnonzero(adjm[partner[direct], v])[0]])
        return ("rotate", u, w, v)
    nu = _matched_neighbors(adjm, partner, u)
    nv = _matched_neighbors(adjm, partner, v)
    if nu.size and nv.size:
        sub = adjm[np.ix_(nu, nv)] & (partner[nu][:, None] != nv[None, :])
        rows, cols = np.nonzero(sub)
        if rows.size:
            return ("double", u, int(nu[rows[0]]), int(nv[cols[0]]), v)
    return None


def matching_boost_set(g: Graph, m: MatchingCert, u: int, v: int) -> BoostSet:
    """All non-edges {x, y} creating the augmenting path u-x^M-x-y-y^M-v."""
    if u == v:
        raise ValueError("witness vertices must be distinct")
    partner = m.partner_array(g.n)
    if partner[u] >= 0 or partner[v] >= 0:
        raise ValueError("witness vertices must be unmatched")
    if _short_augmenting_path(g.adjacency, partner, u, v) is not None:
        raise ValueError("augmenting path of length <= 5 exists; boost set undefined")
    nu = _matched_neighbors(g.adjacency, partner, u)
    nv = _matched_neighbors(g.adjacency, partner, v)
    cand = ~g.adjacency[np.ix_(nu, nv)] & (nu[:, None] != nv[None, :])
    rows, cols = np.nonzero(cand)
    x, y = nu[rows], nv[cols]
    lo, hi = np.minimum(x, y), np.maximum(x, y)
    codes, first = np.unique(lo * g.n + hi, return_index=True)
    return BoostSet(
        kind="matching",
        witness=(int(u), int(v)),
        n=g.n,
        codes=codes,
        tag_a=x[first],
        tag_b=y[first],
    )


def apply_matching_boost(
    g: Graph, m: MatchingCert, tag: tuple[int, int, int, int], *, copy: bool = True
) -> tuple[Graph, MatchingCert]:
    """Add edge {x, y} and flip the induced augmenting path."""
    u, x, v, y = tag
    partner = m.partner_array(g.n)
    if partner[u] >= 0 or partner[v] >= 0 or partner[x] < 0 or partner[y] < 0:
        raise ValueError("stale tag: matching changed")
    xm, ym = int(partner[x]), int(partner[y])
    if g.has_edge(x, y):
        raise ValueError("stale tag: boost edge already present")
    if not (g.has_edge(u, xm) and g.has_edge(v, ym)):
        raise ValueError("stale tag: recipe edges missing")
    g2 = g.copy() if copy else g
    g2.add_edge(x, y)
    new_partner = partner.copy()
    for a, b in ((u, xm), (x, y), (v, ym)):
        new_partner[a] = b
        new_partner[b] = a
    m2 = MatchingCert.from_partner(new_partner)
    m2.validate(g2)
    if m2.size != m.size + 1:
        raise AssertionError("boost did not enlarge the matching by one")
    return g2, m2


# -- long cycles -------------------------------------------------------------


def _canonical_bipartite_cycle(g: Graph, target: int) -> OrientedCycle | None:
    """The alternating 2d-cycle when g contains K_{d, n-d} in canonical layout."""
    d = min(min_degree(g), g.n // 2)
    if d < 2 or 2 * d < target:
        return None
    if not g.adjacency[:d, d:].all():
        return None
    order = np.empty(2 * d, dtype=np.int64)
    order[0::2] = np.arange(d)
    order[1::2] = np.arange(d) + d
    c = OrientedCycle(g.n, order)
    c.validate(g)
    return c


def _absorb(g: Graph, c: OrientedCycle) -> OrientedCycle:
    """Exhaust free insertions and exchange extensions over off-cycle vertices."""
    progress = True
    while progress and c.length < g.n:
        progress = False
        for v in c.off_cycle():
            c2 = free_insertion(g, c, int(v)) or exchange_extension(g, c, int(v))
            if c2 is not None:
                c = c2
                progress = True
                break
    return c


def _greedy_cycle(g: Graph, target: int) -> OrientedCycle | None:
    """Greedy path growth plus closure, then absorption; best effort."""
    n = g.n
    adjm = g.adjacency
    start = int(np.argmax(g.degrees()))
    path = [start]
    in_path = np.zeros(n, dtype=bool)
    in_path[start] = True
    for _ in range(4 * n):
        # extend both ends as far as possible
        extended = True
        while extended:
            extended = False
            for endpoint, append in ((path[-1], True), (path[0], False)):
                cand = np.flatnonzero(adjm[endpoint] & ~in_path)
                if cand.size:
                    w = int(cand[0])
                    in_path[w] = True
                    path.append(w) if append else path.insert(0, w)
                    extended = True
        a, b = path[0], path[-1]
        if len(path) < 3:
            return None
        arr = np.array(path, dtype=np.int64)
        if adjm[a, b]:
            cyc = path
        else:
            cross = np.flatnonzero(adjm[b, arr[:-1]] & adjm[a, arr[1:]])
            if cross.size:
                i = int(cross[0])
                cyc = path[: i + 1] + path[i + 1 :][::-1]
            else:
                # close the longest chord-reachable suffix or prefix instead
                back = np.flatnonzero(adjm[b, arr[:-2]])
                fwd = np.flatnonzero(adjm[a, arr[2:]]) + 2
                best_suffix = len(path) - int(back[0]) if back.size else 0
                best_prefix = int(fwd[-1]) + 1 if fwd.size else 0
                if max(best_suffix, best_prefix) < 3:
                    return None
                if best_suffix >= best_prefix:
                    cyc = path[int(back[0]) :]
                else:
                    cyc = path[: best_prefix]
        c = _absorb(g, OrientedCycle(n, np.array(cyc, dtype=np.int64)))
        if c.length >= target:
            return c
        # reopen the cycle at a neighbor of an off-cycle vertex and regrow
        off = c.off_cycle()
        reopened = False
        for v in off:
            nbrs = np.flatnonzero(adjm[v][c.order])
            if nbrs.size:
                p = int(nbrs[0])
                path = [int(v)] + np.roll(c.order, -p).tolist()
                in_path[:] = False
                in_path[path] = True
                reopened = True
                break
        if not reopened:
            return None
    return None


def find_long_cycle(g: Graph, target: int) -> CycleCert:
    """A cycle of length at least target.

    Exact for n <= 24; otherwise the canonical alternating cycle when the
    graph contains a complete bipartite K_{d, n-d} in canonical layout,
    falling back to greedy growth plus augmentation moves.
    """
    target = max(3, target)
    if g.n <= HAMILTONIAN_CAP:
        cert = longest_cycle_exact(g)
        if cert.length < target:
            raise LongCycleError(f"longest cycle has length {cert.length} < {target}")
        return cert
    c = _canonical_bipartite_cycle(g, target)
    if c is None:
        c = _greedy_cycle(g, target)
    if c is None or c.length < target:
        raise LongCycleError(f"failed to reach cycle length {target} heuristically")
    return c.to_cert()


# -- sprinkling --------------------------------------------------------------


@dataclass(frozen=True)
class SprinkleConfig:
    """Knobs for the round-based sprinkling process."""

    m0: int | None = None  # initial sprinkle size; default grows slowly in n
    lam: int = 0  # slack reported alongside the theoretical sample bound
    mode: str = "certified"  # "certified" | "heuristic"
    max_rounds: int = 100_000
    max_samples: int = 10_000_000

    def __post_init__(self):
        if self.mode not in ("certified", "heuristic"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.max_rounds <= 0 or self.max_samples <= 0:
            raise ValueError("caps must be positive")
        if self.m0 is not None and self.m0 < 0:
            raise ValueError("m0 must be nonnegative")
        if self.lam < 0:
            raise ValueError("lambda must be nonnegative")


@dataclass
class SprinkleRound:
    size_before: int
    boost_size: int
    samples: int
    hit: tuple[int, int]


@dataclass
class SprinkleTrace:
    kind: str  # "ham" | "pm"
    n: int
    m0: int
    initial_codes: np.ndarray
    rounds: list[SprinkleRound] = field(default_factory=list)
    total_samples: int = 0
    outcome: str = "success"
    reason: str = ""
    final_size: int = 0

    @property
    def num_rounds(self) -> int:
        return len(self.rounds)


def _host_eta2(h: Graph) -> int:
    """Twice the Dirac deficiency, n - 2*delta(h); kept integral on purpose."""
    return h.n - 2 * min_degree(h)


def _check_certified_degree(h: Graph, eta2: int) -> None:
    if not 1 <= eta2 <= h.n // 32:
        raise ValueError(
            f"certified mode needs 1/2 <= n/2 - delta <= n/64; got n={h.n}, "
            f"min degree {min_degree(h)}"
        )


def _initial_graph(h: Graph, m0: int, rng: RandomSource) -> tuple[Graph, np.ndarray]:
    codes = sample_edge_codes(h.n, m0, rng)
    g = h.copy()
    for a, b in decode_edge_codes(h.n, codes):
        if not g.has_edge(int(a), int(b)):
            g.add_edge(int(a), int(b))
    return g, codes


def _sample_until_hit(
    stream: Iterator[tuple[int, int]], bs: BoostSet, budget: int
) -> tuple[int, tuple[int, int] | None]:
    samples = 0
    for a, b in stream:
        samples += 1
        if bs.contains(a, b):
            return samples, (a, b)
        if samples >= budget:
            return samples, None
    raise RuntimeError("edge stream exhausted")  # pragma: no cover


def sprinkle_hamiltonian(h: Graph, cfg: SprinkleConfig, rng: RandomSource) -> SprinkleTrace:
    """Theorem-style sprinkling rounds until the graph is Hamiltonian."""
    n = h.n
    eta2 = _host_eta2(h)
    if cfg.mode == "certified":
        _check_certified_degree(h, eta2)
    m0 = cfg.m0 if cfg.m0 is not None else default_m0(n)
    g, codes = _initial_graph(h, m0, rng)
    trace = SprinkleTrace(kind="ham", n=n, m0=m0, initial_codes=codes)
    if n < 3 or not is_2_connected(g):
        trace.outcome = "precondition_failed"
        trace.reason = "not 2-connected after initial sprinkle"
        return trace
    target = n - max(eta2, 0)
    try:
        c = build_oriented_cycle(g, find_long_cycle(g, target).vertices)
    except LongCycleError as exc:
        trace.outcome = "precondition_failed"
        trace.reason = str(exc)
        return trace
    stream = edge_stream(n, rng)
    bound = n * n / 8.0 - 2.0 * n * eta2
    while True:
        c = _absorb(g, c)
        trace.final_size = c.length
        if c.length == n:
            trace.outcome = "success"
            return trace
        if len(trace.rounds) >= cfg.max_rounds:
            trace.outcome = "cap_exceeded"
            trace.reason = "round cap"
            return trace
        v = int(c.off_cycle()[0])
        bs = cycle_boost_set(g, c, v)
        if cfg.mode == "certified":
            if bs.size == 0 or (c.length >= n - eta2 and bs.size < bound):
                raise RuntimeError(
                    f"certified cycle boost set too small: {bs.size} < {bound}"
                )
        if bs.size == 0:
            # outside the theorem's hypotheses the move set can dry up;
            # recompute the longest cycle exactly when feasible
            if n <= HAMILTONIAN_CAP:
                exact = build_oriented_cycle(g, longest_cycle_exact(g).vertices)
                if exact.length > c.length:
                    c = exact
                    continue
            trace.outcome = "cap_exceeded"
            trace.reason = "empty boost set"
            return trace
        budget = cfg.max_samples - trace.total_samples
        samples, hit = _sample_until_hit(stream, bs, budget)
        trace.total_samples += samples
        if hit is None:
            trace.rounds.append(SprinkleRound(c.length, bs.size, samples, (-1, -1)))
            trace.outcome = "cap_exceeded"
            trace.reason = "sample cap"
            return trace
        size_before = c.length
        g, c = apply_cycle_boost(g, c, bs.tag_for(*hit), copy=False)
        trace.rounds.append(SprinkleRound(size_before, bs.size, samples, hit))


def _exhaust_short_augments(adjm: np.ndarray, partner: np.ndarray) -> None:
    """Apply length <= 5 augmenting paths until none remains (in place)."""
    while True:
        unmatched = np.flatnonzero(partner < 0)
        found = None
        for i in range(unmatched.size):
            for j in range(i + 1, unmatched.size):
                found = _short_augmenting_path(
                    adjm, partner, int(unmatched[i]), int(unmatched[j])
                )
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            return
        if found[0] == "edge":
            _, u, v = found
            partner[u], partner[v] = v, u
        elif found[0] == "rotate":
            _, u, w, v = found
            wm = partner[w]
            partner[u], partner[w] = w, u
            partner[wm], partner[v] = v, wm
        else:
            _, u, x, y, v = found
            xm, ym = partner[x], partner[y]
            partner[u], partner[xm] = xm, u
            partner[x], partner[y] = y, x
            partner[v], partner[ym] = ym, v


def _initial_matching(g: Graph, target_cycle: int, mode: str) -> np.ndarray | None:
    """Partner array seeded from a long cycle's alternating edges."""
    n = g.n
    try:
        cert = find_long_cycle(g, target_cycle)
        order = np.array(cert.vertices, dtype=np.int64)
        partner = np.full(n, -1, dtype=np.int64)
        for i in range(0, order.size - 1, 2):
            partner[order[i]], partner[order[i + 1]] = order[i + 1], order[i]
    except LongCycleError:
        if mode == "certified":
            return None
        if n <= 600:
            adj = [np.flatnonzero(g.adjacency[v]).tolist() for v in range(n)]
            return max_matching_partner(n, adj)
        partner = np.full(n, -1, dtype=np.int64)
    # greedy completion over leftover vertices
    for u in np.flatnonzero(partner < 0):
        if partner[u] >= 0:
            continue
        cand = np.flatnonzero(g.adjacency[u] & (partner < 0))
        if cand.size:
            w = int(cand[0])
            partner[u], partner[w] = w, u
    return partner


def sprinkle_pm(h: Graph, cfg: SprinkleConfig, rng: RandomSource) -> SprinkleTrace:
    """Sprinkling rounds until a perfect matching exists (n even)."""
    n = h.n
    if n % 2 != 0:
        raise ValueError("perfect matchings require even n")
    eta2 = _host_eta2(h)
    if cfg.mode == "certified":
        _check_certified_degree(h, eta2)
    m0 = cfg.m0 if cfg.m0 is not None else default_m0(n)
    g, codes = _initial_graph(h, m0, rng)
    trace = SprinkleTrace(kind="pm", n=n, m0=m0, initial_codes=codes)
    if n < 3 or not is_2_connected(g):
        trace.outcome = "precondition_failed"
        trace.reason = "not 2-connected after initial sprinkle"
        return trace
    partner = _initial_matching(g, n - max(eta2, 0), cfg.mode)
    if partner is None:
        trace.outcome = "precondition_failed"
        trace.reason = "no long cycle to seed the matching"
        return trace
    stream = edge_stream(n, rng)
    t = (n - 3 * eta2) // 2
    bound = t * (t - 1) // 2
    adjm = g.adjacency
    while True:
        _exhaust_short_augments(adjm, partner)
        size = int((partner >= 0).sum()) // 2
        trace.final_size = size
        if 2 * size == n:
            trace.outcome = "success"
            return trace
        if len(trace.rounds) >= cfg.max_rounds:
            trace.outcome = "cap_exceeded"
            trace.reason = "round cap"
            return trace
        unmatched = np.flatnonzero(partner < 0)
        u, v = int(unmatched[0]), int(unmatched[1])
        cert = MatchingCert.from_partner(partner)
        bs = matching_boost_set(g, cert, u, v)
        if cfg.mode == "certified":
            if bs.size == 0 or (2 * size >= n - eta2 and bs.size < bound):
                raise RuntimeError(
                    f"certified matching boost set too small: {bs.size} < {bound}"
                )
        if bs.size == 0:
            # outside the theorem's hypotheses: retry from a maximum matching
            adj = [np.flatnonzero(g.adjacency[w]).tolist() for w in range(n)]
            best = max_matching_partner(n, adj)
            if int((best >= 0).sum()) // 2 > size:
                partner = best
                continue
            trace.outcome = "cap_exceeded"
            trace.reason = "empty boost set"
            return trace
        budget = cfg.max_samples - trace.total_samples
        samples, hit = _sample_until_hit(stream, bs, budget)
        trace.total_samples += samples
        if hit is None:
            trace.rounds.append(SprinkleRound(size, bs.size, samples, (-1, -1)))
            trace.outcome = "cap_exceeded"
            trace.reason = "sample cap"
            return trace
        g, cert = apply_matching_boost(g, cert, bs.tag_for(*hit), copy=False)
        adjm = g.adjacency
        partner = cert.partner_array(n)
        trace.rounds.append(SprinkleRound(size, bs.size, samples, hit))
