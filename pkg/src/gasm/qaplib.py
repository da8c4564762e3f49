"""QAPLIB-format instances: parsing, graph adaptation, and the benchmark runs.

The .dat convention is a whitespace-separated token stream (line breaks
carry no meaning): n, then the n x n matrix A row-major, then B. The .sln
convention is "n score" followed by n 1-indexed assignment tokens.

Instances are minimization problems over tr(A P B^T P^T). The propagation
matchers consume them as directed graphs whose nonzero entries become edges
weighted by a measurable attribute, so both the zero pattern and the
magnitudes inform the scores; 2opt works on the raw matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .attributes import MEASURABLE, Attribute
from .baselines import ZagerConfig, run_zager, two_opt_permutation
from .engine import GasmConfig, run_gasm
from .graph import Graph
from .matching import Matching, Permutation
from .metrics import qap_cost, score_ratio

__all__ = [
    "BestKnown",
    "QapInstance",
    "QapRow",
    "parse_instance",
    "parse_solution",
    "serialize_instance",
    "instance_to_graphs",
    "load_instance",
    "load_suite",
    "run_qaplib",
    "phi_distributions",
]

FLAG_NO_BEST = "no-best-known"
FLAG_UNBOUNDED = "positive-score-zero-best"


@dataclass(frozen=True)
class BestKnown:
    score: float
    permutation: Permutation | None = None


@dataclass(frozen=True, eq=False)
class QapInstance:
    name: str
    n: int
    a: np.ndarray
    b: np.ndarray
    best_known: BestKnown | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("instance size must be positive")
        if self.a.shape != (self.n, self.n) or self.b.shape != (self.n, self.n):
            raise ValueError("matrices must be n x n")
        perm = self.best_known.permutation if self.best_known else None
        if perm is not None and (perm.n_a != self.n or perm.n_b != self.n):
            raise ValueError("best-known permutation size does not match the instance")


def _tokens(text: str) -> list[float]:
    out = []
    for tok in text.split():
        try:
            out.append(float(tok))
        except ValueError as exc:
            raise ValueError(f"non-numeric token {tok!r}") from exc
    return out


def parse_instance(text: str, name: str = "") -> QapInstance:
    toks = _tokens(text)
    if not toks:
        raise ValueError("empty instance")
    n = int(toks[0])
    if n < 1 or toks[0] != n:
        raise ValueError(f"invalid size token {toks[0]}")
    if len(toks) != 1 + 2 * n * n:
        raise ValueError(f"expected {1 + 2 * n * n} tokens for n={n}, got {len(toks)}")
    a = np.array(toks[1 : 1 + n * n]).reshape(n, n)
    b = np.array(toks[1 + n * n :]).reshape(n, n)
    return QapInstance(name=name, n=n, a=a, b=b)


def parse_solution(text: str) -> tuple[float, Permutation]:
    toks = _tokens(text)
    if len(toks) < 2:
        raise ValueError("solution needs a size and a score")
    n = int(toks[0])
    if n < 1 or toks[0] != n:
        raise ValueError(f"invalid size token {toks[0]}")
    if len(toks) != 2 + n:
        raise ValueError(f"expected {2 + n} tokens for n={n}, got {len(toks)}")
    score = toks[1]
    mapping = []
    for tok in toks[2:]:
        idx = int(tok)
        if idx != tok or not 1 <= idx <= n:
            raise ValueError(f"assignment token {tok} outside 1..{n}")
        mapping.append(idx - 1)
    return score, Permutation(mapping=tuple(mapping), n_a=n, n_b=n)


def serialize_instance(inst: QapInstance) -> str:
    def fmt(value: float) -> str:
        return str(int(value)) if value == int(value) else repr(float(value))

    lines = [str(inst.n), ""]
    for mat in (inst.a, inst.b):
        lines.extend(" ".join(fmt(v) for v in row) for row in mat)
        lines.append("")
    return "\n".join(lines)


def instance_to_graphs(inst: QapInstance) -> tuple[Graph, Graph]:
    """Directed graph per matrix: an edge per nonzero entry, weight attached.

    The weight is a measurable edge attribute with unset error, so the
    matchers estimate the error from the weight spread. Diagonal entries
    become self-loops.
    """
    return _matrix_graph(inst.a), _matrix_graph(inst.b)


def _matrix_graph(mat: np.ndarray) -> Graph:
    n = mat.shape[0]
    edges = []
    weights = []
    for u in range(n):
        for v in range(n):
            if mat[u, v] != 0:
                edges.append((u, v))
                weights.append(float(mat[u, v]))
    attrs = (Attribute(name="weight", kind=MEASURABLE, values=tuple(weights)),)
    return Graph(directed=True, n=n, edges=tuple(edges), edge_attributes=attrs)


def load_instance(dat_path) -> QapInstance:
    """Instance from a .dat file, best known attached from a sibling .sln."""
    dat_path = Path(dat_path)
    inst = parse_instance(dat_path.read_text(encoding="utf-8"), name=dat_path.stem)
    sln_path = dat_path.with_suffix(".sln")
    if sln_path.exists():
        score, perm = parse_solution(sln_path.read_text(encoding="utf-8"))
        if perm.n_a != inst.n:
            raise ValueError(f"{sln_path.name}: solution size {perm.n_a} != instance size {inst.n}")
        inst = QapInstance(name=inst.name, n=inst.n, a=inst.a, b=inst.b,
                           best_known=BestKnown(score=score, permutation=perm))
    return inst


def load_suite(paths, max_n: int | None = 64) -> tuple[list[QapInstance], list[str]]:
    """Instances from .dat files or directories of them, size-capped.

    Returns the loaded instances plus warning strings for files that failed
    to parse (skipped, not fatal: one bad file should not kill a sweep).
    """
    dat_files: list[Path] = []
    for p in paths:
        p = Path(p)
        if p.is_dir():
            dat_files.extend(sorted(p.glob("*.dat")))
        else:
            dat_files.append(p)
    instances = []
    warnings = []
    for f in dat_files:
        try:
            inst = load_instance(f)
        except (OSError, ValueError) as exc:
            warnings.append(f"{f}: {exc}")
            continue
        if max_n is None or inst.n <= max_n:
            instances.append(inst)
    return instances, warnings


# ============================================================================
# Benchmark execution
# ============================================================================

@dataclass(frozen=True)
class QapRow:
    instance: str
    n: int
    algorithm: str
    seed: int
    cost: float
    best_known: float | None
    phi: float | None
    flag: str = ""


def _instance_permutation(inst: QapInstance, algorithm: str, seed: int) -> np.ndarray:
    if algorithm == "2opt":
        p, _ = two_opt_permutation(inst.a, inst.b, minimize=True, seed=seed)
        return p
    g_a, g_b = instance_to_graphs(inst)
    if algorithm == "gasm":
        matching, _, _ = run_gasm(g_a, g_b, GasmConfig(rng_seed=seed))
    elif algorithm == "zager":
        matching, _ = run_zager(g_a, g_b, ZagerConfig())
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    return _permutation_array(matching, inst.n)


def _permutation_array(matching: Matching, n: int) -> np.ndarray:
    p = np.full(n, -1, dtype=int)
    for u, v in matching.pairs:
        p[u] = v
    # square score matrices make the assignment complete; guard regardless
    if np.any(p < 0):
        taken = {v for _, v in matching.pairs}
        free = (v for v in range(n) if v not in taken)
        for u in np.flatnonzero(p < 0):
            p[u] = next(free)
    return p


def run_qaplib(instances, algorithms=("gasm", "zager", "2opt"), seeds=(0,),
               ) -> list[QapRow]:
    """One row per (instance, algorithm, seed): cost and ratio to best known.

    Rows without a usable ratio carry a flag and an empty phi; aggregation
    must skip them.
    """
    rows = []
    for inst in instances:
        best = inst.best_known.score if inst.best_known else None
        for algorithm in algorithms:
            for seed in seeds:
                p = _instance_permutation(inst, algorithm, seed)
                cost = qap_cost(inst.a, inst.b, p)
                phi: float | None
                flag = ""
                if best is None:
                    phi, flag = None, FLAG_NO_BEST
                else:
                    phi = score_ratio(cost, best)
                    if math.isinf(phi):
                        phi, flag = None, FLAG_UNBOUNDED
                rows.append(QapRow(instance=inst.name, n=inst.n, algorithm=algorithm,
                                   seed=seed, cost=cost, best_known=best,
                                   phi=phi, flag=flag))
    return rows


def phi_distributions(rows) -> dict[str, list[float]]:
    """Sorted finite phi values per algorithm: the empirical CDF supports."""
    out: dict[str, list[float]] = {}
    for row in rows:
        if row.phi is not None:
            out.setdefault(row.algorithm, []).append(row.phi)
    return {alg: sorted(vals) for alg, vals in out.items()}
