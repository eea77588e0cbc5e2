"""Benchmark the numba kernels against their pure numpy/python fallbacks.

Run as: python3 bench/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from rpgsim import kernels
from rpgsim.graph import Graph
from rpgsim.models import RandomSource, complete_bipartite, gnm
from rpgsim.graph import union


def timeit(fn, *args, repeat: int = 5) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_path_dp(repeat: int) -> None:
    rng = RandomSource(42)
    for n in (16, 18, 20):
        g = union(complete_bipartite(n // 2 - 1, n), gnm(n, n // 2, rng.child(n)))
        bits = g.adjacency_bits()
        rows = [("python", kernels.path_dp_py)]
        if kernels.NUMBA_ENABLED:
            kernels.path_dp_nb(bits)  # warm the JIT cache
            rows.append(("numba", kernels.path_dp_nb))
        for name, fn in rows:
            print(f"path_dp           n={n:3d}  {name:7s} {timeit(fn, bits, repeat=repeat)*1e3:9.2f} ms")


def _boost_inputs(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    d = n // 2 - 8
    g = complete_bipartite(d, n)
    order = np.empty(2 * d, dtype=np.int64)
    order[0::2] = np.arange(d)
    order[1::2] = np.arange(d) + d
    adjm = g.adjacency
    v = 2 * d  # off-cycle B vertex; witnesses are all B positions
    mark = adjm[v][order]
    wpos = np.flatnonzero(~mark & np.roll(mark, 1) & np.roll(mark, -1))
    return adjm, order, wpos


def bench_cycle_boost(repeat: int) -> None:
    for n in (256, 512, 1024):
        adjm, order, wpos = _boost_inputs(n)
        rows = [("numpy", kernels.cycle_boost_pairs_np)]
        if kernels.NUMBA_ENABLED:
            kernels.cycle_boost_pairs_nb(adjm, order, wpos)
            rows.append(("numba", kernels.cycle_boost_pairs_nb))
        for name, fn in rows:
            print(
                f"cycle_boost_pairs n={n:4d} {name:7s} "
                f"{timeit(fn, adjm, order, wpos, repeat=repeat)*1e3:9.2f} ms"
            )


def bench_find_exchange(repeat: int) -> None:
    for n in (256, 512, 1024):
        adjm, order, wpos = _boost_inputs(n)
        rows = [("numpy", kernels.find_exchange_np)]
        if kernels.NUMBA_ENABLED:
            kernels.find_exchange_nb(adjm, order, wpos)
            rows.append(("numba", kernels.find_exchange_nb))
        for name, fn in rows:
            print(
                f"find_exchange     n={n:4d} {name:7s} "
                f"{timeit(fn, adjm, order, wpos, repeat=repeat)*1e3:9.2f} ms"
            )


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    print(f"numba backend available: {kernels.NUMBA_ENABLED}")
    bench_path_dp(args.repeat)
    bench_cycle_boost(args.repeat)
    bench_find_exchange(args.repeat)


if __name__ == "__main__":
    main()
