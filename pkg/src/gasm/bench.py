"""Seeded benchmark experiments: generate, derive, match, aggregate.

One experiment sweeps a single parameter over a grid. Per grid point and
sample, a graph G_A is generated, G_B is derived from it (shuffled, with
edges or vertices removed first for the degradation tasks), every algorithm
matches the pair, and accuracy plus structural quality are recorded. Rows
hold per-(grid point, algorithm) means and standard errors.

Seed derivation, fixed and documented: sample i uses SeedSequence(base_seed
+ i), whose generated words seed independent streams in this order:
generation, attribute sampling, degradation, shuffling, then one per
algorithm. Adding an algorithm therefore never disturbs the graphs.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, fields, replace

import numpy as np

from .attributes import MEASURABLE, Attribute
from .baselines import run_two_opt, run_zager
from .engine import GasmConfig, run_gasm
from .generators import (
    balanced_binary_tree,
    circular_ladder,
    degrade_edges,
    degrade_vertices,
    er_gnp,
    shuffle_vertices,
    star_branched,
)
from .graph import Graph
from .matching import Matching
from .metrics import accuracy, structural_quality

__all__ = [
    "TASKS",
    "FAMILIES",
    "ALGORITHMS",
    "AttributeSpec",
    "ExperimentSpec",
    "BenchRow",
    "run_bench",
    "rows_to_csv",
    "rows_to_json",
]

TASKS = ("isomorphic", "degrade_edges", "degrade_vertices")
FAMILIES = ("er_gnp", "balanced_binary_tree", "star_branched", "circular_ladder")
ALGORITHMS = ("gasm", "zager", "2opt")


@dataclass(frozen=True)
class AttributeSpec:
    """Measurable attributes sampled on G_A: values i.i.d. standard normal.

    rho overrides the assumed error on every sampled attribute; None leaves
    it unset so the matcher estimates it from the value spread.
    """

    vertex_count: int = 0
    edge_count: int = 0
    rho: float | None = None


@dataclass(frozen=True)
class ExperimentSpec:
    """One benchmark sweep.

    family_params holds fixed parameters as (name, value) pairs; grid_param
    names the swept one. The degradation ratios delta_e / delta_v live in
    the same namespace, so either can be fixed or swept.
    """

    task: str
    family: str
    family_params: tuple[tuple[str, float], ...] = ()
    grid_param: str = ""
    grid: tuple[float, ...] = ()
    algorithms: tuple[str, ...] = ("gasm",)
    attributes: AttributeSpec = AttributeSpec()
    samples: int = 500
    base_seed: int = 0
    eta: float = 1e-10
    complement_policy: str = "auto"

    def __post_init__(self):
        if self.task not in TASKS:
            raise ValueError(f"task must be one of {TASKS}")
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}")
        for algo in self.algorithms:
            if algo not in ALGORITHMS:
                raise ValueError(f"algorithm must be one of {ALGORITHMS}")
        if self.samples < 1:
            raise ValueError("samples must be positive")
        if not self.grid:
            raise ValueError("grid must hold at least one value")
        if not self.grid_param:
            raise ValueError("grid_param must be named")


@dataclass(frozen=True)
class BenchRow:
    task: str
    family: str
    grid_param: str
    grid_value: float
    algorithm: str
    samples: int
    seed: int
    mean_gamma: float
    se_gamma: float
    mean_qs: float
    se_qs: float


def _build_graph(family: str, params: dict, rng: np.random.Generator) -> Graph:
    if family == "er_gnp":
        return er_gnp(int(round(params["n"])), params["p"],
                      directed=bool(params.get("directed", 0)), seed=rng)
    if family == "balanced_binary_tree":
        return balanced_binary_tree(int(round(params["h"])))
    if family == "star_branched":
        return star_branched(int(round(params["k"])), int(round(params["beta"])))
    if family == "circular_ladder":
        return circular_ladder(int(round(params["c"])))
    raise ValueError(f"unknown family {family!r}")


def _attach_attributes(g: Graph, spec: AttributeSpec, rng: np.random.Generator) -> Graph:
    if spec.vertex_count == 0 and spec.edge_count == 0:
        return g
    v_attrs = tuple(
        Attribute(name=f"v{i}", kind=MEASURABLE,
                  values=tuple(rng.standard_normal(g.n)), error=spec.rho)
        for i in range(spec.vertex_count)
    )
    e_attrs = tuple(
        Attribute(name=f"e{i}", kind=MEASURABLE,
                  values=tuple(rng.standard_normal(g.m)), error=spec.rho)
        for i in range(spec.edge_count)
    )
    return replace(g, vertex_attributes=g.vertex_attributes + v_attrs,
                   edge_attributes=g.edge_attributes + e_attrs)


def _sample_once(spec: ExperimentSpec, grid_value: float, index: int) -> dict[str, tuple[float, float]]:
    """(gamma, q_S) per algorithm for sample `index` at one grid point."""
    words = np.random.SeedSequence(spec.base_seed + index).generate_state(
        4 + len(spec.algorithms), dtype=np.uint64)
    gen_rng = np.random.default_rng(int(words[0]))
    attr_rng = np.random.default_rng(int(words[1]))
    degrade_rng = np.random.default_rng(int(words[2]))
    shuffle_rng = np.random.default_rng(int(words[3]))
    algo_seeds = [int(w) for w in words[4:]]

    params = dict(spec.family_params)
    params[spec.grid_param] = grid_value
    delta_e = params.pop("delta_e", 0.0)
    delta_v = params.pop("delta_v", 0.0)

    g_a = _attach_attributes(_build_graph(spec.family, params, gen_rng),
                             spec.attributes, attr_rng)
    kept = tuple(range(g_a.n))
    if spec.task == "degrade_edges":
        derived = degrade_edges(g_a, delta_e, degrade_rng)
    elif spec.task == "degrade_vertices":
        derived, kept = degrade_vertices(g_a, delta_v, degrade_rng)
    else:
        derived = g_a
    g_b, sigma = shuffle_vertices(derived, shuffle_rng)
    truth = Matching(pairs=tuple((orig, sigma.mapping[j]) for j, orig in enumerate(kept)),
                     n_a=g_a.n, n_b=g_b.n)

    out = {}
    for algo, algo_seed in zip(spec.algorithms, algo_seeds):
        if algo == "gasm":
            cfg = GasmConfig(eta=spec.eta, rng_seed=algo_seed,
                             complement_policy=spec.complement_policy)
            matching, _, _ = run_gasm(g_a, g_b, cfg)
        elif algo == "zager":
            matching, _ = run_zager(g_a, g_b)
        else:
            matching = run_two_opt(g_a, g_b, seed=algo_seed)
        out[algo] = (accuracy(matching, truth), structural_quality(g_a, g_b, matching))
    return out


def _mean_se(values: list[float]) -> tuple[float, float]:
    arr = np.asarray(values)
    mean = float(arr.mean())
    se = float(arr.std(ddof=1) / np.sqrt(arr.size)) if arr.size > 1 else 0.0
    return mean, se


def run_bench(spec: ExperimentSpec) -> list[BenchRow]:
    rows = []
    for grid_value in spec.grid:
        per_algo: dict[str, tuple[list[float], list[float]]] = {
            algo: ([], []) for algo in spec.algorithms}
        for i in range(spec.samples):
            result = _sample_once(spec, grid_value, i)
            for algo, (gamma, qs) in result.items():
                per_algo[algo][0].append(gamma)
                per_algo[algo][1].append(qs)
        for algo in spec.algorithms:
            gammas, qss = per_algo[algo]
            mean_gamma, se_gamma = _mean_se(gammas)
            mean_qs, se_qs = _mean_se(qss)
            rows.append(BenchRow(task=spec.task, family=spec.family,
                                 grid_param=spec.grid_param, grid_value=grid_value,
                                 algorithm=algo, samples=spec.samples,
                                 seed=spec.base_seed,
                                 mean_gamma=mean_gamma, se_gamma=se_gamma,
                                 mean_qs=mean_qs, se_qs=se_qs))
    return rows


# ============================================================================
# Row serialization (shared by the CLI for every table-shaped result)
# ============================================================================

def rows_to_csv(rows) -> str:
    """Comma-separated table: header from the row fields, one line per row.

    None becomes an empty cell; floats keep full repr precision so equal
    runs emit byte-identical files.
    """
    if not rows:
        return ""
    names = [f.name for f in fields(rows[0])]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(names)
    for row in rows:
        record = asdict(row)
        writer.writerow(["" if record[n] is None else record[n] for n in names])
    return buf.getvalue()


def rows_to_json(rows, metadata: dict | None = None) -> str:
    payload = {
        "metadata": metadata or {},
        "rows": [asdict(row) for row in rows],
    }
    return json.dumps(payload, indent=1) + "\n"
