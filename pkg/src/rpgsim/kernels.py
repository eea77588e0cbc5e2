"""Hot numeric kernels, numba-compiled with pure numpy/python fallbacks.

The backend is picked once at import time: numba is used unless the
environment variable ``RPGSIM_NO_NUMBA=1`` is set or numba is missing.
Both implementations of every kernel are kept importable so the test
suite and ``bench/bench_kernels.py`` can compare them directly.

Kernels:

* ``path_dp``          -- subset DP over paths anchored at vertex 0,
                          used by the exact Hamiltonicity / longest
                          cycle oracles (n <= 24).
* ``cycle_boost_pairs`` -- enumerate candidate boost edges for a stuck
                          cycle and off-cycle witness vertex.
* ``find_exchange``    -- first applicable exchange-extension move.
"""

from __future__ import annotations

import os

import numpy as np

NUMBA_DISABLED = os.environ.get("RPGSIM_NO_NUMBA", "").strip().lower() in {"1", "true", "yes"}

try:
    if NUMBA_DISABLED:
        raise ImportError("numba disabled by RPGSIM_NO_NUMBA")
    from numba import njit

    NUMBA_ENABLED = True
except ImportError:  # pragma: no cover - exercised via env flag
    njit = None
    NUMBA_ENABLED = False


# -- anchored path DP -----------------------------------------------------
#
# dp[mask] is the bitmask of endpoints u such that some simple path
# starts at vertex 0, visits exactly the vertices of `mask` (which must
# contain bit 0) and ends at u.  Masks with bit 0 set are the odd ones.


def path_dp_py(adj_bits: np.ndarray) -> np.ndarray:
    n = len(adj_bits)
    size = 1 << n
    adj = [int(a) for a in adj_bits]
    dp = [0] * size
    dp[1] = 1
    for mask in range(1, size, 2):
        ends = dp[mask]
        if not ends:
            continue
        for u in range(1, n):
            bit = 1 << u
            if not mask & bit and adj[u] & ends:
                dp[mask | bit] |= bit
    return np.array(dp, dtype=np.int64)


def _path_dp_impl(adj_bits):
    n = len(adj_bits)
    size = 1 << n
    dp = np.zeros(size, dtype=np.int64)
    dp[1] = 1
    for mask in range(1, size, 2):
        ends = dp[mask]
        if ends == 0:
            continue
        for u in range(1, n):
            bit = np.int64(1) << u
            if mask & bit == 0 and adj_bits[u] & ends != 0:
                dp[mask | bit] |= bit
    return dp


path_dp_nb = njit(cache=True)(_path_dp_impl) if NUMBA_ENABLED else None


# -- cycle boost enumeration ----------------------------------------------
#
# Inputs: the adjacency matrix, the cycle as a vertex array `order`, and
# the positions (indices into `order`) of the witness set W_v.  A boost
# candidate is a pair (w, u_pred) with w in W_v, u a cycle neighbor of w
# other than its successor, and the pair itself a non-edge.  Pairs are
# emitted in row-major scan order in both backends.


def cycle_boost_pairs_np(adjm: np.ndarray, order: np.ndarray, wpos: np.ndarray):
    L = order.size
    if wpos.size == 0:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty.copy(), empty.copy()
    nbr = adjm[order[wpos]][:, order]
    nbr[np.arange(wpos.size), (wpos + 1) % L] = False
    rows, cols = np.nonzero(nbr)
    w = order[wpos[rows]]
    u = order[cols]
    x = order[(cols - 1) % L]
    keep = ~adjm[w, x] & (w != x)
    return w[keep], u[keep], x[keep]


def _cycle_boost_pairs_impl(adjm, order, wpos):
    L = order.size
    cap = wpos.size * L
    out_w = np.empty(cap, dtype=np.int64)
    out_u = np.empty(cap, dtype=np.int64)
    out_x = np.empty(cap, dtype=np.int64)
    cnt = 0
    for k in range(wpos.size):
        pw = wpos[k]
        w = order[pw]
        skip = (pw + 1) % L
        for p in range(L):
            if p == skip:
                continue
            u = order[p]
            if adjm[w, u]:
                x = order[(p - 1) % L]
                if x != w and not adjm[w, x]:
                    out_w[cnt] = w
                    out_u[cnt] = u
                    out_x[cnt] = x
                    cnt += 1
    return out_w[:cnt], out_u[:cnt], out_x[:cnt]


cycle_boost_pairs_nb = njit(cache=True)(_cycle_boost_pairs_impl) if NUMBA_ENABLED else None


# -- exchange-extension search --------------------------------------------
#
# Find the first (in scan order over W_v then cycle positions) pair of
# positions (pw, pu) such that w = order[pw] has both u = order[pu] and
# its predecessor as cycle neighbors, with u not the successor of w.
# Returns (-1, -1) when no exchange move exists.


def find_exchange_np(adjm: np.ndarray, order: np.ndarray, wpos: np.ndarray):
    L = order.size
    if wpos.size == 0:
        return -1, -1
    nbr = adjm[order[wpos]][:, order]
    cand = nbr & np.roll(nbr, 1, axis=1)
    cand[np.arange(wpos.size), (wpos + 1) % L] = False
    rows, cols = np.nonzero(cand)
    if rows.size == 0:
        return -1, -1
    return int(wpos[rows[0]]), int(cols[0])


def _find_exchange_impl(adjm, order, wpos):
    L = order.size
    for k in range(wpos.size):
        pw = wpos[k]
        w = order[pw]
        skip = (pw + 1) % L
        for p in range(L):
            if p == skip:
                continue
            if adjm[w, order[p]] and adjm[w, order[(p - 1) % L]]:
                return pw, p
    return -1, -1


find_exchange_nb = njit(cache=True)(_find_exchange_impl) if NUMBA_ENABLED else None


if NUMBA_ENABLED:
    path_dp = path_dp_nb
    cycle_boost_pairs = cycle_boost_pairs_nb
    find_exchange = find_exchange_nb
else:
    path_dp = path_dp_py
    cycle_boost_pairs = cycle_boost_pairs_np
    find_exchange = find_exchange_np
