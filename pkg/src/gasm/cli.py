"""Command line: generate graphs, match pairs, run benchmark sweeps.

Thin layer over the library: parse flags, build configs, serialize results.
Tables go to stdout (or --out); human-oriented summaries and warnings go to
stderr so piped output stays machine-readable. Exit code 0 on success, 2 on
any input or runtime error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .baselines import ZagerConfig, run_two_opt, run_zager
from .bench import (
    ALGORITHMS,
    FAMILIES,
    TASKS,
    AttributeSpec,
    ExperimentSpec,
    rows_to_csv,
    rows_to_json,
    run_bench,
)
from .engine import GasmConfig, run_gasm
from .generators import balanced_binary_tree, circular_ladder, er_gnp, star_branched
from .graph import graph_to_json, load_graph
from .matching import Matching
from .metrics import accuracy, structural_quality
from .qaplib import load_suite, phi_distributions, run_qaplib

__all__ = ["main"]


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_rho(value: str) -> float | None:
    if value == "auto":
        return None
    rho = float(value)
    if rho < 0:
        raise ValueError("rho must be non-negative or 'auto'")
    return rho


def _parse_param(item: str) -> tuple[str, float]:
    name, sep, value = item.partition("=")
    if not sep or not name:
        raise ValueError(f"expected name=value, got {item!r}")
    return name, float(value)


def _parse_grid(item: str) -> tuple[str, tuple[float, ...]]:
    name, sep, rest = item.partition("=")
    if not sep or not name or not rest:
        raise ValueError(f"expected name=v1,v2,..., got {item!r}")
    return name, tuple(float(tok) for tok in rest.split(","))


# ============================================================================
# Subcommands
# ============================================================================

def _cmd_gen(args) -> int:
    if args.family == "er_gnp":
        if args.n is None or args.p is None:
            raise ValueError("er_gnp needs --n and --p")
        g = er_gnp(args.n, args.p, directed=args.directed, seed=args.seed)
    elif args.family == "balanced_binary_tree":
        if args.height is None:
            raise ValueError("balanced_binary_tree needs --h")
        g = balanced_binary_tree(args.height)
    elif args.family == "star_branched":
        if args.k is None or args.beta is None:
            raise ValueError("star_branched needs --k and --beta")
        g = star_branched(args.k, args.beta)
    else:
        if args.c is None:
            raise ValueError("circular_ladder needs --c")
        g = circular_ladder(args.c)
    _emit(graph_to_json(g), args.out)
    return 0


def _load_truth(path: str, n_a: int, n_b: int) -> Matching:
    """Ground truth file: either a JSON array (index -> image) or
    {"pairs": [[a, b], ...]}."""
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    if isinstance(payload, dict):
        pairs = tuple((int(u), int(v)) for u, v in payload["pairs"])
    else:
        pairs = tuple((i, int(v)) for i, v in enumerate(payload))
    return Matching(pairs=pairs, n_a=n_a, n_b=n_b)


def _cmd_match(args) -> int:
    g_a = load_graph(args.graph_a)
    g_b = load_graph(args.graph_b)
    iterations = None
    complemented = None
    if args.algo == "gasm":
        cfg = GasmConfig(eta=args.eta, rng_seed=args.seed,
                         complement_policy=args.complement)
        matching, _, diag = run_gasm(g_a, g_b, cfg)
        iterations, complemented = diag.iterations, diag.complemented
    elif args.algo == "zager":
        matching, _ = run_zager(g_a, g_b, ZagerConfig())
        iterations, complemented = matching.iterations, False
    else:
        matching = run_two_opt(g_a, g_b, seed=args.seed)
        complemented = False
    gamma = None
    if args.truth:
        gamma = accuracy(matching, _load_truth(args.truth, g_a.n, g_b.n))
    q_s = structural_quality(g_a, g_b, matching)

    if args.format == "json":
        report = {
            "algorithm": args.algo,
            "pairs": [[u, v] for u, v in matching.pairs],
            "gamma": gamma,
            "q_s": q_s,
            "iterations": iterations,
            "complemented": complemented,
        }
        _emit(json.dumps(report, indent=1) + "\n", args.out)
    else:
        lines = ["vertex_a,vertex_b"]
        lines.extend(f"{u},{v}" for u, v in matching.pairs)
        _emit("\n".join(lines) + "\n", args.out)
        gamma_text = "" if gamma is None else f" gamma={gamma}"
        print(f"algorithm={args.algo}{gamma_text} q_s={q_s} "
              f"iterations={iterations} complemented={complemented}", file=sys.stderr)
    return 0


def _cmd_bench(args) -> int:
    grid_param, grid = _parse_grid(args.grid)
    spec = ExperimentSpec(
        task=args.task,
        family=args.family,
        family_params=tuple(_parse_param(p) for p in args.param),
        grid_param=grid_param,
        grid=grid,
        algorithms=tuple(args.algo) if args.algo else ("gasm",),
        attributes=AttributeSpec(vertex_count=args.vertex_attrs,
                                 edge_count=args.edge_attrs,
                                 rho=_parse_rho(args.rho)),
        samples=args.samples,
        base_seed=args.seed,
        eta=args.eta,
        complement_policy=args.complement,
    )
    rows = run_bench(spec)
    if args.format == "json":
        metadata = {
            "task": spec.task,
            "family": spec.family,
            "family_params": dict(spec.family_params),
            "grid_param": spec.grid_param,
            "grid": list(spec.grid),
            "algorithms": list(spec.algorithms),
            "samples": spec.samples,
            "base_seed": spec.base_seed,
            "eta": spec.eta,
            "complement_policy": spec.complement_policy,
            "vertex_attrs": spec.attributes.vertex_count,
            "edge_attrs": spec.attributes.edge_count,
            "rho": spec.attributes.rho,
            "note": "desk-scale defaults; raise --samples for tighter error bars",
        }
        _emit(rows_to_json(rows, metadata), args.out)
    else:
        _emit(rows_to_csv(rows), args.out)
        print(f"bench: {spec.task}/{spec.family}, {len(rows)} rows, "
              f"{spec.samples} samples per point, seed {spec.base_seed}", file=sys.stderr)
    return 0


def _cmd_qaplib(args) -> int:
    instances, warnings = load_suite(args.paths, max_n=args.max_n)
    for warning in warnings:
        print(f"warning: {warning}", file=sys.stderr)
    algorithms = tuple(args.algo) if args.algo else ALGORITHMS
    seeds = tuple(args.seed + i for i in range(args.samples))
    rows = run_qaplib(instances, algorithms=algorithms, seeds=seeds)
    dists = phi_distributions(rows)
    quantiles = {
        algo: {
            "count": len(vals),
            "q25": _quantile(vals, 0.25),
            "median": _quantile(vals, 0.5),
            "q75": _quantile(vals, 0.75),
        }
        for algo, vals in sorted(dists.items())
    }
    if args.format == "json":
        metadata = {
            "instances": len(instances),
            "max_n": args.max_n,
            "seeds": list(seeds),
            "phi_quantiles": quantiles,
            "phi_cdf": dists,
        }
        _emit(rows_to_json(rows, metadata), args.out)
    else:
        _emit(rows_to_csv(rows), args.out)
        for algo, q in quantiles.items():
            print(f"{algo}: median phi {q['median']} over {q['count']} rows", file=sys.stderr)
    return 0


def _quantile(sorted_values: list[float], q: float) -> float | None:
    if not sorted_values:
        return None
    pos = q * (len(sorted_values) - 1)
    lo = int(pos)
    hi = min(lo + 1, len(sorted_values) - 1)
    frac = pos - lo
    return sorted_values[lo] * (1 - frac) + sorted_values[hi] * frac


# ============================================================================
# Parser
# ============================================================================

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gasm", description="Attributed graph matching and benchmark harness")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph and write its JSON")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--directed", action="store_true")
    p.add_argument("--h", dest="height", type=int, help="tree depth")
    p.add_argument("--k", type=int, help="number of star arms")
    p.add_argument("--beta", type=int, help="arm length")
    p.add_argument("--c", type=int, help="ladder cycle length")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("match", help="match two graph JSON files")
    p.add_argument("graph_a")
    p.add_argument("graph_b")
    p.add_argument("--algo", choices=ALGORITHMS, default="gasm")
    p.add_argument("--truth", help="ground-truth JSON (array or {\"pairs\": ...})")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--eta", type=float, default=1e-10)
    p.add_argument("--complement", choices=("auto", "never", "always"), default="auto")
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_match)

    p = sub.add_parser("bench", help="run a seeded benchmark sweep")
    p.add_argument("--task", choices=TASKS, required=True)
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--param", action="append", default=[], metavar="NAME=VALUE",
                   help="fixed family or degradation parameter (repeatable)")
    p.add_argument("--grid", required=True, metavar="NAME=V1,V2,...",
                   help="swept parameter and its values")
    p.add_argument("--algo", action="append", choices=ALGORITHMS,
                   help="repeatable; default gasm")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--vertex-attrs", type=int, default=0)
    p.add_argument("--edge-attrs", type=int, default=0)
    p.add_argument("--rho", default="auto", help="attribute error, or 'auto'")
    p.add_argument("--eta", type=float, default=1e-10)
    p.add_argument("--complement", choices=("auto", "never", "always"), default="auto")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("qaplib", help="run algorithms over QAPLIB .dat/.sln files")
    p.add_argument("paths", nargs="+", help=".dat files or directories of them")
    p.add_argument("--algo", action="append", choices=ALGORITHMS,
                   help="repeatable; default all")
    p.add_argument("--max-n", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1,
                   help="seeds per (instance, algorithm): seed..seed+samples-1")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_qaplib)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
