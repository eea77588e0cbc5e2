"""Acceptance gate: desk-scale reproduction of the perturbed-threshold results.

Each criterion prints a single [PASS]/[FAIL] line.  Monte Carlo criteria
use fixed master seeds; the determinism criterion recomputes them and
compares the CSV artifacts byte for byte.
"""

from __future__ import annotations

import math

import numpy as np
import pytest

from rpgsim.augment import (
    SprinkleConfig,
    apply_cycle_boost,
    apply_matching_boost,
    build_oriented_cycle,
    cycle_boost_set,
    exchange_extension,
    find_long_cycle,
    free_insertion,
    matching_boost_set,
)
from rpgsim.graph import Graph, is_2_connected, min_degree, union
from rpgsim.models import (
    PerturbationSpec,
    RandomSource,
    complete_bipartite,
    gnm,
    pair_count,
    two_cliques,
)
from rpgsim.oracles import (
    extremal_ham_predicate,
    extremal_pm_predicate,
    hamiltonian_exact,
    longest_cycle_exact,
    max_linear_forest,
    max_matching,
)
from rpgsim.experiments import (
    BipartiteFamily,
    ResultRow,
    conjecture_pm_constant,
    estimate_probability,
    locate_threshold,
    threshold_rows,
    two_connectivity_experiment,
    write_results_csv,
    write_trace_csv,
    y_statistics,
)

import bruteforce as bf


def report(criterion: str, passed: bool, detail: str = "") -> None:
    tag = "PASS" if passed else "FAIL"
    print(f"[{tag}] {criterion}" + (f" :: {detail}" if detail else ""))
    assert passed, f"{criterion} :: {detail}"


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


# -- criterion 1: oracle cross-validation ------------------------------------


def _random_instance(i: int, rng: RandomSource) -> Graph:
    n = 4 + i % 7  # 4..10
    gen = rng.child(i).generator
    p = gen.uniform(0.15, 0.9) if n <= 8 else gen.uniform(0.1, 0.5)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = gen.random(len(pairs)) < p
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


def _oracles_agree(g: Graph) -> bool:
    cert = hamiltonian_exact(g)
    ref = bf.bf_hamiltonian_cycle(g)
    if (cert is None) != (ref is None):
        return False
    if cert is not None:
        cert.validate(g)
    ref_len = bf.bf_longest_cycle_length(g)
    if ref_len == 0:
        try:
            longest_cycle_exact(g)
            return False
        except ValueError:
            pass
    else:
        lc = longest_cycle_exact(g)
        lc.validate(g)
        if lc.length != ref_len:
            return False
    m = max_matching(g)
    m.validate(g)
    if m.size != bf.bf_max_matching_size(g):
        return False
    return len(max_linear_forest(g)) == bf.bf_max_linear_forest_size(g)


def test_criterion_1_oracle_cross_validation():
    rng = RandomSource(101)
    named = [
        petersen(),
        complete_bipartite(2, 5),
        cycle_graph(5),
        cycle_graph(8),
        cycle_graph(10),
    ]
    instances = named + [_random_instance(i, rng) for i in range(500)]
    bad = sum(not _oracles_agree(g) for g in instances)
    report(
        "criterion 1: exact oracles match brute force on 505 instances",
        bad == 0,
        f"{bad} disagreements",
    )


# -- criterion 2: extremal predicate equivalence ------------------------------


def test_criterion_2_extremal_predicate_equivalence():
    rng = RandomSource(102)
    mismatches = 0
    i = 0
    for n in (10, 12, 14, 16, 18):
        for _ in range(100):
            gen = rng.child(i).generator
            d = n // 2 - int(gen.integers(1, 3))
            m = int(gen.integers(0, n + 1))
            r = gnm(n, m, rng.child(i, 1))
            g = union(complete_bipartite(d, n), r)
            if extremal_ham_predicate(n, d, r) != (hamiltonian_exact(g) is not None):
                mismatches += 1
            if extremal_pm_predicate(n, d, r) != (2 * max_matching(g).size == n):
                mismatches += 1
            i += 1
    report(
        "criterion 2: extremal predicates equal exact verdicts on 500 perturbations",
        mismatches == 0,
        f"{mismatches} mismatches",
    )


# -- criterion 3: Lemma 3 / Lemma 6 boost-set bounds ---------------------------


def _randomized_host(n: int, eta2: int, rng: RandomSource, *, for_pm: bool) -> Graph:
    """K_{d,n-d} plus A-side clutter and a sub-threshold B-side matching."""
    d = (n - eta2) // 2
    g = complete_bipartite(d, n)
    gen = rng.generator
    for _ in range(int(gen.integers(0, 2 * d))):
        u, v = int(gen.integers(0, d)), int(gen.integers(0, d))
        if u != v and not g.has_edge(u, v):
            g.add_edge(u, v)
    limit = eta2 // 2 - 1 if for_pm else eta2 - 1
    b_used: set[int] = set()
    placed = 0
    while placed < limit:
        u, v = int(gen.integers(d, n)), int(gen.integers(d, n))
        if u != v and u not in b_used and v not in b_used:
            g.add_edge(u, v)
            b_used.update((u, v))
            placed += 1
    return g


def _stuck_cycle(g: Graph):
    c = build_oriented_cycle(g, find_long_cycle(g, 2 * min_degree(g)).vertices)
    progress = True
    while progress and c.length < g.n:
        progress = False
        for v in c.off_cycle():
            nxt = free_insertion(g, c, int(v)) or exchange_extension(g, c, int(v))
            if nxt is not None:
                c = nxt
                progress = True
                break
    return c


def _check_cycle_bound(g: Graph, n: int, eta2: int) -> tuple[bool, str]:
    bound = n * n / 8 - 2 * n * eta2
    c = _stuck_cycle(g)
    if c.length == n:
        return False, "host unexpectedly Hamiltonian"
    for v in c.off_cycle():
        bs = cycle_boost_set(g, c, int(v))
        if bs.size < bound:
            return False, f"cycle boost set {bs.size} < {bound}"
        for _, tag in bs.items():
            _, c2 = apply_cycle_boost(g, c, tag)
            if c2.length != c.length + 1:
                return False, "boost edge failed to extend the cycle"
    return True, ""


def _check_matching_bound(g: Graph, n: int, eta2: int) -> tuple[bool, str]:
    t = (n - 3 * eta2) // 2
    bound = t * (t - 1) // 2
    m = max_matching(g)
    if 2 * m.size == n:
        return False, "host unexpectedly has a perfect matching"
    unmatched = np.flatnonzero(m.partner_array(n) < 0)
    for i in range(unmatched.size):
        for j in range(i + 1, unmatched.size):
            bs = matching_boost_set(g, m, int(unmatched[i]), int(unmatched[j]))
            if bs.size < bound:
                return False, f"matching boost set {bs.size} < {bound}"
            for _, tag in bs.items():
                _, m2 = apply_matching_boost(g, m, tag)
                if m2.size != m.size + 1:
                    return False, "boost edge failed to augment the matching"
    return True, ""


def test_criterion_3_boost_set_bounds():
    combos = [(64, 2), (64, 4), (128, 2), (128, 4)]
    failures: list[str] = []
    rng = RandomSource(103)
    hosts_per_combo = 13
    for ci, (n, eta2) in enumerate(combos):
        d = (n - eta2) // 2
        hosts = [complete_bipartite(d, n)]
        hosts += [
            _randomized_host(n, eta2, rng.child(ci, k), for_pm=False)
            for k in range(hosts_per_combo)
        ]
        for g in hosts:
            ok, why = _check_cycle_bound(g, n, eta2)
            if not ok:
                failures.append(f"cycle n={n} eta2={eta2}: {why}")
        pm_hosts = [complete_bipartite(d, n)]
        pm_hosts += [
            _randomized_host(n, eta2, rng.child(ci, 100 + k), for_pm=True)
            for k in range(hosts_per_combo)
        ]
        for g in pm_hosts:
            ok, why = _check_matching_bound(g, n, eta2)
            if not ok:
                failures.append(f"matching n={n} eta2={eta2}: {why}")
    report(
        "criterion 3: boost-set sizes meet the n^2/8-4n*eta and C(n/2-3eta,2) bounds",
        not failures,
        "; ".join(failures[:3]),
    )


# -- criteria 4-7 computations (shared with the determinism criterion) --------

N_BIG, D_BIG = 2000, 950  # eta = 50
TRIALS = 200


def compute_sprinkle_stats():
    h = complete_bipartite(248, 512)  # n=512, eta=8
    ham = y_statistics(h, SprinkleConfig(mode="certified"), TRIALS, RandomSource(104))
    pm = y_statistics(
        h, SprinkleConfig(mode="certified"), TRIALS, RandomSource(105), kind="pm"
    )
    return ham, pm


def _probe_row(fam: BipartiteFamily, prop: str, m: int, seed: int) -> ResultRow:
    est = estimate_probability(
        fam, PerturbationSpec("gnm", m=m), prop, TRIALS, RandomSource(seed)
    )
    return ResultRow(
        family=fam.name, n=fam.n, d=fam.d, eta=fam.eta, model="gnm", m=m,
        p=m / pair_count(fam.n), property=prop, trials=est.trials,
        successes=est.successes, freq=est.freq, wilson_lo=est.wilson_lo,
        wilson_hi=est.wilson_hi,
    )


def compute_ham_threshold():
    fam = BipartiteFamily(N_BIG, D_BIG)
    low = _probe_row(fam, "ham", 250, 106)   # m = 5 eta
    high = _probe_row(fam, "ham", 600, 107)  # m = 12 eta
    est = locate_threshold(fam, "ham", TRIALS, RandomSource(108))
    return low, high, est


def compute_pm_threshold():
    fam = BipartiteFamily(N_BIG, D_BIG)
    low = _probe_row(fam, "pm", 100, 109)    # m = 2 eta
    high = _probe_row(fam, "pm", 400, 110)   # m = 8 eta
    est = locate_threshold(fam, "pm", TRIALS, RandomSource(111))
    return low, high, est


def compute_two_connectivity():
    h = two_cliques(200, 0)
    at_20 = two_connectivity_experiment(h, 20, TRIALS, RandomSource(112))
    at_0 = two_connectivity_experiment(h, 0, TRIALS, RandomSource(113))
    rows = [
        ResultRow("two-cliques", 200, 99, 1.0, "gnm", m, m / pair_count(200),
                  "2conn", e.trials, e.successes, e.freq, e.wilson_lo, e.wilson_hi)
        for m, e in ((0, at_0), (20, at_20))
    ]
    return at_20, at_0, rows


@pytest.fixture(scope="module")
def sprinkle_stats():
    return compute_sprinkle_stats()


@pytest.fixture(scope="module")
def ham_threshold():
    return compute_ham_threshold()


@pytest.fixture(scope="module")
def pm_threshold():
    return compute_pm_threshold()


@pytest.fixture(scope="module")
def two_conn():
    return compute_two_connectivity()


def test_criterion_4_sprinkling_statistics(sprinkle_stats):
    ham, pm = sprinkle_stats
    eta = ham.eta2 / 2  # 8
    problems = []
    if ham.max_rounds > 2 * eta:
        problems.append(f"ham rounds {ham.max_rounds} > {2 * eta}")
    if ham.mean > 16 * eta:
        problems.append(f"mean(Y) {ham.mean:.1f} > {16 * eta}")
    var_se = ham.variance * math.sqrt(2 / (TRIALS - 1))
    if ham.variance > 112 * eta + 3 * var_se:
        problems.append(f"var(Y) {ham.variance:.1f} > {112 * eta} + 3SE")
    if pm.max_rounds > eta:
        problems.append(f"pm rounds {pm.max_rounds} > {eta}")
    p_min = 0.25 - 8 * eta / 512
    pm_bound = float(np.mean(pm.rounds)) / p_min + 3 * pm.std_error
    if pm.mean > pm_bound:
        problems.append(f"pm mean(Y) {pm.mean:.1f} > {pm_bound:.1f}")
    report(
        "criterion 4: sprinkle statistics within Theorem-5-style bounds "
        f"(mean Y={ham.mean:.1f}<=128, var={ham.variance:.1f}, "
        f"rounds<={ham.max_rounds}; pm mean Y={pm.mean:.1f}, rounds<={pm.max_rounds})",
        not problems,
        "; ".join(problems),
    )


def test_criterion_5_sharp_hamiltonicity_constant(ham_threshold):
    low, high, est = ham_threshold
    problems = []
    if low.freq > 0.10:
        problems.append(f"freq at 5*eta = {low.freq}")
    if high.freq < 0.90:
        problems.append(f"freq at 12*eta = {high.freq}")
    if not 0.85 * 400 <= est.m_star <= 1.15 * 400:
        problems.append(f"m* = {est.m_star}")
    report(
        f"criterion 5: Hamiltonicity threshold m*={est.m_star} in [340, 460], "
        f"f(250)={low.freq:.3f}, f(600)={high.freq:.3f}",
        not problems,
        "; ".join(problems),
    )


def test_criterion_6_sharp_pm_constant(pm_threshold, ham_threshold):
    low, high, est = pm_threshold
    problems = []
    if low.freq > 0.10:
        problems.append(f"freq at 2*eta = {low.freq}")
    if high.freq < 0.90:
        problems.append(f"freq at 8*eta = {high.freq}")
    if not 0.85 * 200 <= est.m_star <= 1.15 * 200:
        problems.append(f"m* = {est.m_star}")
    ratio = ham_threshold[2].m_star / est.m_star
    if not 1.7 <= ratio <= 2.3:
        problems.append(f"ham/pm ratio = {ratio:.3f}")
    report(
        f"criterion 6: PM threshold m*={est.m_star} in [170, 230], "
        f"ham/pm ratio={ratio:.3f}",
        not problems,
        "; ".join(problems),
    )


def test_criterion_7_two_connectivity(two_conn):
    at_20, at_0, _ = two_conn
    ok = at_20.freq >= 0.9 and at_0.freq == 0.0
    report(
        f"criterion 7: 2-connectivity freq(m=20)={at_20.freq:.3f}>=0.9, "
        f"freq(m=0)={at_0.freq}",
        ok,
        f"freqs {at_0.freq}, {at_20.freq}",
    )


def test_criterion_8_conjecture_solver():
    alphas = (0.1, 0.2, 0.3, 0.4, 0.49)
    results = [conjecture_pm_constant(a, 1e-10) for a in alphas]
    problems = []
    for q in results:
        if q.residual_fixed_point > 1e-10 or q.residual_outer > 1e-10:
            problems.append(f"alpha={q.alpha}: residuals too large")
    cs = [q.c for q in results]
    if cs != sorted(cs, reverse=True):
        problems.append(f"C not decreasing: {cs}")
    report(
        "criterion 8: conjecture solver residuals <= 1e-10 and C decreasing in alpha",
        not problems,
        "; ".join(problems),
    )


def _write_artifacts(directory, sprinkle, ham, pm, tc) -> dict[str, bytes]:
    ham_stats, pm_stats = sprinkle
    files = {
        "c4_traces_ham.csv": lambda p: write_trace_csv(p, ham_stats.traces),
        "c4_traces_pm.csv": lambda p: write_trace_csv(p, pm_stats.traces),
    }
    out: dict[str, bytes] = {}
    for name, writer in files.items():
        path = str(directory / name)
        writer(path)
        out[name] = (directory / name).read_bytes()
    for name, (low, high, est) in (("c5_ham.csv", ham), ("c6_pm.csv", pm)):
        rows = [low, high] + threshold_rows(est)
        path = str(directory / name)
        write_results_csv(path, rows)
        out[name] = (directory / name).read_bytes()
    path = str(directory / "c7_2conn.csv")
    write_results_csv(path, tc[2])
    out["c7_2conn.csv"] = (directory / "c7_2conn.csv").read_bytes()
    return out


def test_criterion_9_determinism(
    tmp_path, sprinkle_stats, ham_threshold, pm_threshold, two_conn
):
    first_dir = tmp_path / "first"
    second_dir = tmp_path / "second"
    first_dir.mkdir()
    second_dir.mkdir()
    first = _write_artifacts(first_dir, sprinkle_stats, ham_threshold, pm_threshold, two_conn)
    second = _write_artifacts(
        second_dir,
        compute_sprinkle_stats(),
        compute_ham_threshold(),
        compute_pm_threshold(),
        compute_two_connectivity(),
    )
    diffs = [name for name in first if first[name] != second[name]]
    report(
        "criterion 9: repeated runs with the same master seeds give byte-identical CSVs",
        not diffs,
        f"differing files: {diffs}",
    )
