"""Command-line interface: generate, check, sprinkle, threshold, conjecture."""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .augment import SprinkleConfig, sprinkle_hamiltonian, sprinkle_pm
from .experiments import (
    BipartiteFamily,
    conjecture_pm_constant,
    linear_forest_threshold_scan,
    locate_threshold,
    threshold_rows,
    write_results_csv,
    write_trace_csv,
)
from .graph import Graph, is_2_connected, read_edge_list, write_edge_list
from .models import (
    RandomSource,
    complete_bipartite,
    gnm,
    gnp,
    two_cliques,
)
from .oracles import (
    hamiltonian_exact,
    longest_cycle_exact,
    max_linear_forest,
    max_matching,
    pancyclic_exact,
)

__all__ = ["main"]


def _family_graph(args) -> Graph:
    if args.family == "bipartite":
        d = args.d if args.d is not None else _d_from_eta(args)
        return complete_bipartite(d, args.n)
    if args.family == "two-cliques":
        return two_cliques(args.n, args.overlap)
    rng = RandomSource(args.seed)
    if args.family == "gnp":
        if args.p is None:
            raise SystemExit("gnp requires --p")
        return gnp(args.n, args.p, rng)
    if args.family == "gnm":
        if args.m is None:
            raise SystemExit("gnm requires --m")
        return gnm(args.n, args.m, rng)
    raise SystemExit(f"unknown family {args.family!r}")


def _d_from_eta(args) -> int:
    if args.eta is None:
        raise SystemExit("bipartite family requires --d or --eta")
    d = (args.n - int(round(2 * args.eta))) // 2
    if d < 1:
        raise SystemExit("eta too large for this n")
    return d


def _cmd_generate(args) -> int:
    g = _family_graph(args)
    write_edge_list(g, args.output)
    print(json.dumps({"n": g.n, "edges": g.edge_count, "output": args.output}))
    return 0


def _cmd_check(args) -> int:
    g = read_edge_list(args.input)
    prop = args.property
    verdict: dict = {"property": prop, "n": g.n, "edges": g.edge_count}
    if prop == "ham":
        cert = hamiltonian_exact(g)
        verdict["verdict"] = cert is not None
        verdict["certificate"] = list(cert.vertices) if cert else None
    elif prop == "pm":
        cert = max_matching(g)
        verdict["verdict"] = g.n % 2 == 0 and 2 * cert.size == g.n
        verdict["certificate"] = sorted([list(e) for e in cert.pairs])
    elif prop == "2conn":
        verdict["verdict"] = is_2_connected(g)
        verdict["certificate"] = None
    elif prop == "pancyclic":
        verdict["verdict"] = pancyclic_exact(g)
        verdict["certificate"] = None
    elif prop == "longest-cycle":
        cert = longest_cycle_exact(g)
        verdict["verdict"] = cert.length
        verdict["certificate"] = list(cert.vertices)
    elif prop == "max-matching":
        cert = max_matching(g)
        verdict["verdict"] = cert.size
        verdict["certificate"] = sorted([list(e) for e in cert.pairs])
    elif prop == "max-linear-forest":
        forest = max_linear_forest(g)
        verdict["verdict"] = len(forest)
        verdict["certificate"] = [list(e) for e in forest]
    else:
        raise SystemExit(f"unknown property {prop!r}")
    print(json.dumps(verdict))
    return 0


def _cmd_sprinkle(args) -> int:
    if args.input:
        h = read_edge_list(args.input)
    else:
        h = _family_graph(args)
    cfg = SprinkleConfig(m0=args.m0, mode=args.mode)
    runner = sprinkle_hamiltonian if args.kind == "ham" else sprinkle_pm
    master = RandomSource(args.seed)
    traces = [runner(h, cfg, master.child(t)) for t in range(args.trials)]
    if args.trace_out:
        write_trace_csv(args.trace_out, traces)
    summary = {
        "kind": args.kind,
        "n": h.n,
        "trials": args.trials,
        "outcomes": {
            o: sum(1 for tr in traces if tr.outcome == o)
            for o in sorted({tr.outcome for tr in traces})
        },
        "mean_Y": sum(tr.total_samples for tr in traces) / args.trials,
        "max_rounds": max(tr.num_rounds for tr in traces),
    }
    print(json.dumps(summary))
    return 0 if all(tr.outcome == "success" for tr in traces) else 1


def _cmd_threshold(args) -> int:
    rng = RandomSource(args.seed)
    if args.property == "linear-forest":
        alpha = 0.5 - args.eta / args.n
        est = linear_forest_threshold_scan(alpha, args.n, args.trials, rng)
    else:
        family = BipartiteFamily(args.n, (args.n - int(round(2 * args.eta))) // 2)
        est = locate_threshold(family, args.property, args.trials, rng)
    if args.out:
        write_results_csv(args.out, threshold_rows(est))
    print(
        json.dumps(
            {
                "property": est.prop,
                "n": est.n,
                "eta": est.eta,
                "m_star": est.m_star,
                "p_star": est.p_star,
                "predicted": est.predicted_m,
                "predicted_p": est.predicted_p,
                "ratio": est.ratio,
                "unreliable": est.unreliable,
            }
        )
    )
    return 0


def _cmd_conjecture(args) -> int:
    q = conjecture_pm_constant(args.alpha, args.tol)
    out = dataclasses.asdict(q)
    if args.json:
        print(json.dumps(out))
    else:
        for k, v in out.items():
            print(f"{k}: {v}")
    return 0


def _add_family_args(p: argparse.ArgumentParser, *, required: bool) -> None:
    p.add_argument(
        "--family",
        choices=["bipartite", "two-cliques", "gnp", "gnm"],
        required=required,
    )
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--eta", type=float)
    p.add_argument("--p", type=float)
    p.add_argument("--m", type=int)
    p.add_argument("--overlap", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rpgsim",
        description="Simulator for randomly perturbed dense graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a host or random graph as an edge list")
    _add_family_args(p, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", required=True)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("check", help="run an exact oracle and print a JSON verdict")
    p.add_argument(
        "--property",
        required=True,
        choices=[
            "ham",
            "pm",
            "2conn",
            "pancyclic",
            "longest-cycle",
            "max-matching",
            "max-linear-forest",
        ],
    )
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("sprinkle", help="run sprinkle trials and dump traces")
    p.add_argument("--input")
    _add_family_args(p, required=False)
    p.add_argument("--kind", choices=["ham", "pm"], default="ham")
    p.add_argument("--mode", choices=["certified", "heuristic"], default="certified")
    p.add_argument("--m0", type=int)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trace-out", dest="trace_out")
    p.set_defaults(func=_cmd_sprinkle)

    p = sub.add_parser("threshold", help="locate the empirical 50% point")
    p.add_argument("--family", choices=["bipartite"], default="bipartite")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eta", type=float, required=True)
    p.add_argument(
        "--property", required=True, choices=["ham", "pm", "linear-forest"]
    )
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_threshold)

    p = sub.add_parser("conjecture", help="solve the sparse-regime constant C(alpha)")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_conjecture)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
