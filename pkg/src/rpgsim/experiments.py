"""Monte Carlo harness: probability estimation, threshold location,
sprinkling statistics, and the fixed-point constant calculators.

Thresholds are located in edge units (uniform G_{n,m} perturbations) and
converted to probability units via p = m / (n(n-1)/2).  Every trial is
seeded as (master seed, probe index, trial index), so probes are
comparable and all reports are deterministic given the master seed.
"""

from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass, field

import numpy as np

from .augment import SprinkleConfig, SprinkleTrace, sprinkle_hamiltonian, sprinkle_pm
from .graph import Graph, is_2_connected, min_degree, union
from .matching import max_matching_size_from_edges
from .models import (
    PerturbationSpec,
    RandomSource,
    complete_bipartite,
    decode_edge_codes,
    gnm,
    pair_count,
    sample_edge_codes,
    two_cliques,
)
from .oracles import (
    CapacityError,
    hamiltonian_exact,
    max_linear_forest_size,
    max_matching,
    pancyclic_exact,
)

__all__ = [
    "BipartiteFamily",
    "TwoCliquesFamily",
    "FrequencyEstimate",
    "TrialRecord",
    "ProbeResult",
    "ThresholdEstimate",
    "YStatistics",
    "ConjectureQuery",
    "ResultRow",
    "TraceRow",
    "wilson_interval",
    "estimate_probability",
    "locate_threshold",
    "y_statistics",
    "two_connectivity_experiment",
    "conjecture_pm_constant",
    "linear_forest_threshold_scan",
    "threshold_rows",
    "write_results_csv",
    "read_results_csv",
    "write_trace_csv",
    "read_trace_csv",
]

_Z95 = 1.959963984540054


def wilson_interval(successes: int, trials: int, z: float = _Z95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if not 0 <= successes <= trials:
        raise ValueError("successes outside [0, trials]")
    phat = successes / trials
    denom = 1.0 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


# -- families ----------------------------------------------------------------


@dataclass(frozen=True)
class BipartiteFamily:
    """Extremal host K_{d, n-d} with A = {0..d-1}."""

    n: int
    d: int
    name: str = field(default="bipartite", init=False)

    def __post_init__(self):
        if not 1 <= self.d <= self.n - 1:
            raise ValueError("need 1 <= d <= n-1")

    @property
    def eta(self) -> float:
        return (self.n - 2 * self.d) / 2.0

    def host(self) -> Graph:
        return complete_bipartite(self.d, self.n)


@dataclass(frozen=True)
class TwoCliquesFamily:
    """Two cliques covering 0..n-1 sharing `overlap` vertices."""

    n: int
    overlap: int = 0
    name: str = field(default="two-cliques", init=False)

    @property
    def d(self) -> int:
        return min_degree(self.host())

    @property
    def eta(self) -> float:
        return (self.n - 2 * self.d) / 2.0

    def host(self) -> Graph:
        return two_cliques(self.n, self.overlap)


# -- probability estimation --------------------------------------------------


@dataclass(frozen=True)
class TrialRecord:
    trial: int
    seed_key: tuple[int, ...]
    n: int
    property: str
    verdict: bool
    wall_time: float


@dataclass
class FrequencyEstimate:
    trials: int
    successes: int
    freq: float
    wilson_lo: float
    wilson_hi: float
    aborts: int = 0
    records: list[TrialRecord] | None = None


def _greedy_linear_forest_size(edges: np.ndarray) -> int:
    """Cheap lower bound: scan edges, keep those preserving a linear forest."""
    parent: dict[int, int] = {}
    degree: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    kept = 0
    for u, v in edges.tolist():
        if degree.get(u, 0) >= 2 or degree.get(v, 0) >= 2:
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            continue
        parent[ru] = rv
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
        kept += 1
    return kept


def _bipartite_fast_verdict(n: int, d: int, prop: str, codes: np.ndarray) -> bool:
    """Extremal-predicate verdict from perturbation edge codes alone.

    Only the restriction of the perturbation to B = {d..n-1} matters for
    K_{d, n-d} hosts, so the host graph is never materialized.
    """
    edges = decode_edge_codes(n, codes)
    b_edges = edges[edges[:, 0] >= d]
    if prop == "ham":
        need = n - 2 * d
        if need <= 0:
            return True
        if b_edges.shape[0] < need:
            return False
        try:
            return max_linear_forest_size(b_edges) >= need
        except CapacityError:
            # dense regime: a greedy forest suffices as a one-sided witness
            if _greedy_linear_forest_size(b_edges) >= need:
                return True
            raise
    if prop == "pm":
        if n % 2 != 0:
            raise ValueError("perfect matchings require even n")
        need = n // 2 - d
        if need <= 0:
            return True
        if b_edges.shape[0] < need:
            return False
        return max_matching_size_from_edges(b_edges) >= need
    raise ValueError(f"no fast verdict for property {prop!r}")


def _oracle_verdict(g: Graph, prop: str) -> bool:
    if prop == "ham":
        return hamiltonian_exact(g) is not None
    if prop == "pm":
        if g.n % 2 != 0:
            return False
        return 2 * max_matching(g).size == g.n
    if prop == "2conn":
        return is_2_connected(g)
    if prop == "pancyclic":
        return pancyclic_exact(g)
    raise ValueError(f"unknown property {prop!r}")


def estimate_probability(
    family,
    perturbation: PerturbationSpec,
    prop: str,
    trials: int,
    rng: RandomSource,
    *,
    collect: bool = False,
) -> FrequencyEstimate:
    """Success frequency of `prop` over independent perturbed trials.

    The extremal bipartite family with ham/pm dispatches to the
    equivalent restricted-subgraph predicates; everything else unions
    the host with the sample and runs the exact oracle (capacity
    errors propagate).
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    n = family.n
    fast = isinstance(family, BipartiteFamily) and prop in ("ham", "pm")
    host = None if fast else family.host()
    successes = 0
    records: list[TrialRecord] | None = [] if collect else None
    for t in range(trials):
        child = rng.child(t)
        start = time.perf_counter()
        if fast:
            codes = perturbation.sample_codes(n, child)
            verdict = _bipartite_fast_verdict(n, family.d, prop, codes)
        else:
            g = union(host, perturbation.sample(n, child))
            verdict = _oracle_verdict(g, prop)
        if verdict:
            successes += 1
        if records is not None:
            records.append(
                TrialRecord(t, child.key, n, prop, verdict, time.perf_counter() - start)
            )
    lo, hi = wilson_interval(successes, trials)
    return FrequencyEstimate(trials, successes, successes / trials, lo, hi, records=records)


# -- threshold location ------------------------------------------------------


@dataclass
class ProbeResult:
    m: int
    trials: int
    successes: int
    freq: float
    wilson_lo: float
    wilson_hi: float
    aborts: int = 0


@dataclass
class ThresholdEstimate:
    family: str
    n: int
    d: int
    eta: float
    prop: str
    probes: list[ProbeResult]
    m_star: float
    p_star: float
    predicted_m: float
    predicted_p: float
    ratio: float
    model: str = "gnm"
    unreliable: bool = False


def _predicted_edge_threshold(prop: str, eta: float) -> float:
    # p* = 16 eta / n^2 (ham) and 8 eta / n^2 (pm); times n(n-1)/2 pairs
    # this is 8 eta resp. 4 eta edges up to the (n-1)/n factor.
    if prop in ("ham", "linear-forest"):
        return 8.0 * eta
    if prop == "pm":
        return 4.0 * eta
    raise ValueError(f"no predicted threshold for property {prop!r}")


def _bisect_threshold(
    trial_fn,
    *,
    pairs_total: int,
    trials: int,
    rng: RandomSource,
    target: float,
    start_hi: int,
) -> tuple[list[ProbeResult], float, int]:
    """Generic frequency bisection on m; trial_fn(m, rng) -> bool | None.

    None marks a capacity abort; aborted trials are excluded from the
    frequency denominator but tallied.  Returns (probes, m_star, aborts).
    """
    probe_idx = 0
    cache: dict[int, ProbeResult] = {}

    def probe(m: int) -> ProbeResult:
        nonlocal probe_idx
        if m in cache:
            return cache[m]
        child = rng.child(probe_idx)
        probe_idx += 1
        successes = aborts = 0
        for t in range(trials):
            verdict = trial_fn(m, child.child(t))
            if verdict is None:
                aborts += 1
            elif verdict:
                successes += 1
        valid = max(1, trials - aborts)
        lo, hi = wilson_interval(successes, valid)
        res = ProbeResult(m, valid, successes, successes / valid, lo, hi, aborts)
        cache[m] = res
        return res

    lo_res = probe(0)
    if lo_res.freq >= target:
        raise ValueError("property already holds at m = 0; probes do not bracket")
    lo, hi = 0, max(4, start_hi)
    while probe(hi).freq < target:
        hi *= 2
        if hi > pairs_total:
            raise ValueError("property frequency never reached the target")
    while hi - lo > max(2, math.ceil(0.02 * hi)):
        mid = (lo + hi) // 2
        if probe(mid).freq >= target:
            hi = mid
        else:
            lo = mid
    m_star = (lo + hi) / 2.0
    probes = sorted(cache.values(), key=lambda r: r.m)
    return probes, m_star, sum(r.aborts for r in probes)


def locate_threshold(
    family, prop: str, trials: int, rng: RandomSource, *, target: float = 0.5
) -> ThresholdEstimate:
    """Empirical 50% point of a monotone property, in edge units."""
    n = family.n
    total = pair_count(n)
    eta = family.eta
    predicted_m = _predicted_edge_threshold(prop, eta)

    def trial_fn(m: int, child: RandomSource) -> bool:
        spec = PerturbationSpec("gnm", m=m)
        if isinstance(family, BipartiteFamily) and prop in ("ham", "pm"):
            return _bipartite_fast_verdict(n, family.d, prop, spec.sample_codes(n, child))
        return _oracle_verdict(union(family.host(), spec.sample(n, child)), prop)

    probes, m_star, _ = _bisect_threshold(
        trial_fn,
        pairs_total=total,
        trials=trials,
        rng=rng,
        target=target,
        start_hi=int(math.ceil(predicted_m)),
    )
    d = family.d if isinstance(family, BipartiteFamily) else min_degree(family.host())
    return ThresholdEstimate(
        family=family.name,
        n=n,
        d=d,
        eta=eta,
        prop=prop,
        probes=probes,
        m_star=m_star,
        p_star=m_star / total,
        predicted_m=predicted_m,
        predicted_p=predicted_m / total,
        ratio=m_star / predicted_m if predicted_m else math.inf,
    )


def linear_forest_threshold_scan(
    alpha: float, n: int, trials: int, rng: RandomSource
) -> ThresholdEstimate:
    """Threshold in G(n-d, m) for a linear forest of n - 2d edges.

    This is the restricted-subgraph form of the Hamiltonicity threshold
    for K_{d, n-d} hosts, so the prediction is the same 16*eta/n^2 (in
    probability units over the full n-vertex pair space).
    """
    if not 0 < alpha < 0.5:
        raise ValueError("alpha must lie in (0, 1/2)")
    d = int(alpha * n)
    nb = n - d
    need = n - 2 * d
    eta = (n - 2 * d) / 2.0
    total_b = pair_count(nb)

    def trial_fn(m: int, child: RandomSource) -> bool | None:
        edges = decode_edge_codes(nb, sample_edge_codes(nb, m, child))
        if edges.shape[0] < need:
            return False
        try:
            return max_linear_forest_size(edges) >= need
        except CapacityError:
            return None

    # prediction mapped into B-side edge units: p* = 16 eta / n^2 over
    # the full graph, and the B-side pair space has C(n-d, 2) pairs.
    predicted_m = 16.0 * eta / (n * n) * total_b
    probes, m_star, aborts = _bisect_threshold(
        trial_fn,
        pairs_total=total_b,
        trials=trials,
        rng=rng,
        target=0.5,
        start_hi=int(math.ceil(predicted_m)),
    )
    total_trials = sum(r.trials + r.aborts for r in probes)
    return ThresholdEstimate(
        family="linear-forest",
        n=n,
        d=d,
        eta=eta,
        prop="linear-forest",
        probes=probes,
        m_star=m_star,
        p_star=m_star / total_b,
        predicted_m=predicted_m,
        predicted_p=16.0 * eta / (n * n),
        ratio=m_star / predicted_m if predicted_m else math.inf,
        unreliable=aborts > 0.05 * total_trials,
    )


# -- sprinkling statistics ---------------------------------------------------


@dataclass
class YStatistics:
    kind: str
    n: int
    eta2: int  # n - 2 * min_degree(host)
    trials: int
    ys: np.ndarray
    rounds: np.ndarray
    mean: float
    variance: float
    std_error: float
    quantiles: dict[float, float]
    max_rounds: int
    mean_bound: float  # 16 eta
    variance_bound: float  # 112 eta
    mean_flag: bool
    variance_flag: bool
    round_hit_rates: list[float]
    traces: list[SprinkleTrace]


def y_statistics(
    h: Graph, cfg: SprinkleConfig, trials: int, rng: RandomSource, *, kind: str = "ham"
) -> YStatistics:
    """Empirical moments of the total sample count Y over sprinkle runs."""
    if kind not in ("ham", "pm"):
        raise ValueError(f"unknown sprinkle kind {kind!r}")
    runner = sprinkle_hamiltonian if kind == "ham" else sprinkle_pm
    traces: list[SprinkleTrace] = []
    for t in range(trials):
        trace = runner(h, cfg, rng.child(t))
        if trace.outcome != "success":
            raise RuntimeError(
                f"sprinkle trial {t} failed: {trace.outcome} ({trace.reason})"
            )
        traces.append(trace)
    ys = np.array([tr.total_samples for tr in traces], dtype=np.float64)
    rounds = np.array([tr.num_rounds for tr in traces], dtype=np.int64)
    mean = float(ys.mean())
    variance = float(ys.var(ddof=1)) if trials > 1 else 0.0
    se = float(ys.std(ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
    eta2 = h.n - 2 * min_degree(h)
    mean_bound = 8.0 * eta2  # 16 eta with eta = eta2 / 2
    variance_bound = 56.0 * eta2  # 112 eta
    var_se = variance * math.sqrt(2.0 / max(1, trials - 1))
    max_round = int(rounds.max()) if trials else 0
    per_round: list[float] = []
    for i in range(max_round):
        samples = [tr.rounds[i].samples for tr in traces if tr.num_rounds > i]
        per_round.append(len(samples) / sum(samples) if samples else 0.0)
    qs = {q: float(np.quantile(ys, q)) for q in (0.5, 0.9, 0.99)}
    return YStatistics(
        kind=kind,
        n=h.n,
        eta2=eta2,
        trials=trials,
        ys=ys,
        rounds=rounds,
        mean=mean,
        variance=variance,
        std_error=se,
        quantiles=qs,
        max_rounds=max_round,
        mean_bound=mean_bound,
        variance_bound=variance_bound,
        mean_flag=mean > mean_bound + 3 * se,
        variance_flag=variance > variance_bound + 3 * var_se,
        round_hit_rates=per_round,
        traces=traces,
    )


def two_connectivity_experiment(
    h: Graph, m: int, trials: int, rng: RandomSource
) -> FrequencyEstimate:
    """Frequency with which h plus a uniform m-edge perturbation is 2-connected."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    successes = 0
    for t in range(trials):
        g = union(h, gnm(h.n, m, rng.child(t)))
        if is_2_connected(g):
            successes += 1
    lo, hi = wilson_interval(successes, trials)
    return FrequencyEstimate(trials, successes, successes / trials, lo, hi)


# -- fixed-point constant calculator ----------------------------------------


@dataclass
class ConjectureQuery:
    alpha: float
    tol: float
    c: float
    gamma_star: float
    gamma_upper: float
    residual_fixed_point: float
    residual_outer: float
    grid_certified: bool


def _smallest_fixed_point(a: float, tol: float) -> float:
    """Smallest root of x = a * exp(-a * e^(-x)) on [0, inf).

    The map is increasing and exceeds the identity at 0, so iteration
    from 0 ascends to the smallest root; a Newton polish then drives the
    residual to machine precision.
    """
    x = 0.0
    for _ in range(100_000):
        nxt = a * math.exp(-a * math.exp(-x))
        if abs(nxt - x) <= 1e-16 * max(1.0, abs(nxt)):
            x = nxt
            break
        x = nxt
    for _ in range(50):
        fx = a * math.exp(-a * math.exp(-x))
        g = fx - x
        gprime = fx * a * math.exp(-x) - 1.0
        if abs(gprime) < 1e-12:
            break
        step = g / gprime
        if not math.isfinite(step):
            break
        nxt = x - step
        if nxt < 0 or abs(nxt - x) <= 1e-17 * max(1.0, abs(x)):
            break
        x = nxt
    if abs(a * math.exp(-a * math.exp(-x)) - x) > tol:
        raise RuntimeError(f"fixed-point iteration failed to converge (a={a})")
    return x


def _certify_smallest(a: float, root: float, step: float = 1e-4) -> bool:
    """Grid check that x = F(x) has no earlier root in [0, root - step]."""
    upper = root - step
    if upper <= 0:
        return True
    xs = np.arange(0.0, upper, step)
    gap = a * np.exp(-a * np.exp(-xs)) - xs
    return bool((gap > 0).all())


def conjecture_pm_constant(alpha: float, tol: float = 1e-10) -> ConjectureQuery:
    """Solve for the constant C(alpha) of the sparse-regime matching threshold.

    For each C, gamma_* is the smallest fixed point of
    x = (1-alpha) C exp(-(1-alpha) C e^{-x}) and
    gamma^* = (1-alpha) C e^{-gamma_*}; the outer equation
    1 - (gamma_* + gamma^* + gamma_* gamma^*) / ((2-2alpha) C)
    = (1-2alpha)/(2-2alpha) is solved for C by bisection.
    """
    if not 0 < alpha < 0.5:
        raise ValueError("alpha must lie in (0, 1/2)")
    if tol <= 0:
        raise ValueError("tol must be positive")
    rhs = (1.0 - 2.0 * alpha) / (2.0 - 2.0 * alpha)

    def outer(c: float) -> float:
        a = (1.0 - alpha) * c
        gs = _smallest_fixed_point(a, tol)
        gu = a * math.exp(-gs)
        return 1.0 - (gs + gu + gs * gu) / ((2.0 - 2.0 * alpha) * c) - rhs

    lo, hi = 1e-9, 1.0
    if outer(lo) >= 0:
        raise RuntimeError("outer equation has unexpected sign at C -> 0")
    while outer(hi) < 0:
        hi *= 2.0
        if hi > 1e6:
            raise RuntimeError("failed to bracket the outer equation")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if outer(mid) < 0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-16 * hi:
            break
    c = 0.5 * (lo + hi)
    a = (1.0 - alpha) * c
    gs = _smallest_fixed_point(a, tol)
    gu = a * math.exp(-gs)
    res_fp = abs(a * math.exp(-a * math.exp(-gs)) - gs)
    res_outer = abs(1.0 - (gs + gu + gs * gu) / ((2.0 - 2.0 * alpha) * c) - rhs)
    if res_fp > tol or res_outer > tol:
        raise RuntimeError(
            f"solver residuals above tolerance: {res_fp:.3e}, {res_outer:.3e}"
        )
    return ConjectureQuery(
        alpha=alpha,
        tol=tol,
        c=c,
        gamma_star=gs,
        gamma_upper=gu,
        residual_fixed_point=res_fp,
        residual_outer=res_outer,
        grid_certified=_certify_smallest(a, gs),
    )


# -- CSV interfaces ----------------------------------------------------------

RESULT_COLUMNS = [
    "family",
    "n",
    "d",
    "eta",
    "model",
    "m",
    "p",
    "property",
    "trials",
    "successes",
    "freq",
    "wilson_lo",
    "wilson_hi",
]

TRACE_COLUMNS = [
    "trial",
    "round",
    "structure_size",
    "boost_size",
    "samples",
    "hit_u",
    "hit_v",
    "total_Y",
    "outcome",
]


@dataclass
class ResultRow:
    family: str
    n: int
    d: int
    eta: float
    model: str
    m: int
    p: float
    property: str
    trials: int
    successes: int
    freq: float
    wilson_lo: float
    wilson_hi: float


@dataclass
class TraceRow:
    trial: int
    round: int
    structure_size: int
    boost_size: int
    samples: int
    hit_u: int
    hit_v: int
    total_y: int
    outcome: str


def threshold_rows(est: ThresholdEstimate) -> list[ResultRow]:
    """One result row per probe, in ascending m order."""
    total = pair_count(est.n)
    return [
        ResultRow(
            family=est.family,
            n=est.n,
            d=est.d,
            eta=est.eta,
            model=est.model,
            m=pr.m,
            p=pr.m / total,
            property=est.prop,
            trials=pr.trials,
            successes=pr.successes,
            freq=pr.freq,
            wilson_lo=pr.wilson_lo,
            wilson_hi=pr.wilson_hi,
        )
        for pr in est.probes
    ]


def write_results_csv(path: str, rows: list[ResultRow]) -> None:
    """Deterministic writer: repr() floats round-trip exactly."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(RESULT_COLUMNS)
        for r in rows:
            writer.writerow(
                [
                    r.family,
                    r.n,
                    r.d,
                    repr(r.eta),
                    r.model,
                    r.m,
                    repr(r.p),
                    r.property,
                    r.trials,
                    r.successes,
                    repr(r.freq),
                    repr(r.wilson_lo),
                    repr(r.wilson_hi),
                ]
            )


def read_results_csv(path: str) -> list[ResultRow]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != RESULT_COLUMNS:
            raise ValueError(f"unexpected results CSV header: {header}")
        rows = []
        for rec in reader:
            rows.append(
                ResultRow(
                    family=rec[0],
                    n=int(rec[1]),
                    d=int(rec[2]),
                    eta=float(rec[3]),
                    model=rec[4],
                    m=int(rec[5]),
                    p=float(rec[6]),
                    property=rec[7],
                    trials=int(rec[8]),
                    successes=int(rec[9]),
                    freq=float(rec[10]),
                    wilson_lo=float(rec[11]),
                    wilson_hi=float(rec[12]),
                )
            )
    return rows


def trace_rows(traces: list[SprinkleTrace]) -> list[TraceRow]:
    """Flatten sprinkle traces; a run with no rounds emits a round-0 row."""
    rows: list[TraceRow] = []
    for t, tr in enumerate(traces):
        if not tr.rounds:
            rows.append(
                TraceRow(t, 0, tr.final_size, 0, 0, -1, -1, tr.total_samples, tr.outcome)
            )
            continue
        for i, rd in enumerate(tr.rounds, start=1):
            rows.append(
                TraceRow(
                    t,
                    i,
                    rd.size_before,
                    rd.boost_size,
                    rd.samples,
                    rd.hit[0],
                    rd.hit[1],
                    tr.total_samples,
                    tr.outcome,
                )
            )
    return rows


def write_trace_csv(path: str, traces: list[SprinkleTrace]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(TRACE_COLUMNS)
        for r in trace_rows(traces):
            writer.writerow(
                [
                    r.trial,
                    r.round,
                    r.structure_size,
                    r.boost_size,
                    r.samples,
                    r.hit_u,
                    r.hit_v,
                    r.total_y,
                    r.outcome,
                ]
            )


def read_trace_csv(path: str) -> list[TraceRow]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != TRACE_COLUMNS:
            raise ValueError(f"unexpected trace CSV header: {header}")
        return [
            TraceRow(
                trial=int(rec[0]),
                round=int(rec[1]),
                structure_size=int(rec[2]),
                boost_size=int(rec[3]),
                samples=int(rec[4]),
                hit_u=int(rec[5]),
                hit_v=int(rec[6]),
                total_y=int(rec[7]),
                outcome=rec[8],
            )
            for rec in reader
        ]
