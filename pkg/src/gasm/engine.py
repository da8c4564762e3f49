"""Iterative score propagation fusing graph structure with attribute priors.

The pipeline scores every vertex pair (u in A, v in B) by how well their
neighborhoods agree, then extracts a matching by linear assignment. Vertex
and edge scores feed each other through the incidence operators; attribute
similarities enter once, at initialization, and propagate from there. A tiny
uniform noise added to the vertex prior breaks structural ties so that
degenerate optima (score ties that mix up symmetric vertices) are filtered
out by the assignment step.

Dense pairs are handled through the complement trick: when the two graphs
fill more than half of their joint edge universe, iteration runs on the
complement graphs instead, which have the same symmetries but fewer edges.
Initialization always uses the direct operators so edge attributes are never
silently dropped.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .attributes import joint_distance
from .graph import (
    Graph,
    as_undirected,
    complement,
    effective_diameter,
    incidence_unoriented,
    source_terminus,
)
from .lap import solve_max
from .matching import Matching

__all__ = [
    "GasmConfig",
    "ScoreState",
    "Operators",
    "RunDiagnostics",
    "normalization_factor",
    "structural_operators",
    "convergence_iterations",
    "init_scores",
    "iterate",
    "restore_isolated",
    "run_gasm",
    "match_edges",
]

COMPLEMENT_POLICIES = ("auto", "never", "always")


@dataclass(frozen=True)
class GasmConfig:
    """Knobs of one matching run.

    eta is the amplitude of the uniform tie-breaking noise; it must stay far
    below the smallest meaningful score difference (the default suits
    integer-scale structural scores). max_iterations overrides the number of
    propagation rounds applied after initialization. normalize keeps scores
    bounded by dividing each updated vertex-score matrix by the expected
    growth factor; it never changes the returned matching, only the scale.
    """

    eta: float = 1e-10
    rng_seed: int = 0
    complement_policy: str = "auto"
    max_iterations: int | None = None
    normalize: bool = True

    def __post_init__(self):
        if not self.eta >= 0:
            raise ValueError("eta must be non-negative")
        if self.complement_policy not in COMPLEMENT_POLICIES:
            raise ValueError(f"complement_policy must be one of {COMPLEMENT_POLICIES}")
        if self.max_iterations is not None and self.max_iterations < 1:
            raise ValueError("max_iterations must be positive when set")


@dataclass(frozen=True)
class ScoreState:
    """Vertex scores x (n_A x n_B), edge scores y (m_A x m_B), state index k.

    k counts score states: 1 after initialization, +1 per propagation round.
    y is None until the first round has run (edge scores are produced inside
    the update, not at initialization).
    """

    x: np.ndarray
    y: np.ndarray | None
    k: int


@dataclass(frozen=True)
class Operators:
    """Structural matrices iterated by the updates.

    One matrix per graph for undirected pairs (unoriented incidence), two for
    directed ones (source, terminus). When complemented is set the operators
    belong to the complement graphs and f_x reflects the complement
    densities.
    """

    a: tuple[np.ndarray, ...]
    b: tuple[np.ndarray, ...]
    complemented: bool
    f_x: float


@dataclass(frozen=True)
class RunDiagnostics:
    iterations: int
    complemented: bool
    f_x: float
    x_means: tuple[float, ...]


def _check_pair(g_a: Graph, g_b: Graph) -> None:
    if g_a.directed != g_b.directed:
        raise ValueError("cannot match a directed graph against an undirected one")


def _graph_operators(g: Graph) -> tuple[np.ndarray, ...]:
    if g.directed:
        return source_terminus(g)
    return (incidence_unoriented(g),)


def normalization_factor(g_a: Graph, g_b: Graph) -> float:
    """Expected per-round growth of the vertex scores: 4 d_A d_B + 1.

    d is the average degree m/n (average out-degree for directed graphs).
    Callers iterating on complements must pass the complement graphs, whose
    densities are the ones that matter.
    """
    if g_a.n == 0 or g_b.n == 0:
        raise ValueError("normalization factor undefined for empty graphs")
    return 4.0 * (g_a.m / g_a.n) * (g_b.m / g_b.n) + 1.0


def _wants_complements(g_a: Graph, g_b: Graph, policy: str) -> bool:
    if policy == "never":
        return False
    if policy == "always":
        return True
    if policy != "auto":
        raise ValueError(f"complement policy must be one of {COMPLEMENT_POLICIES}")
    # switch when the pair fills over half of the joint edge universe
    # (self-loops included in the universe count)
    if g_a.directed:
        return 2 * (g_a.m + g_b.m) > g_a.n ** 2 + g_b.n ** 2
    return 4 * (g_a.m + g_b.m) > g_a.n * (g_a.n + 1) + g_b.n * (g_b.n + 1)


def structural_operators(g_a: Graph, g_b: Graph, policy: str = "auto") -> Operators:
    """Operators for the update rounds, complementing both graphs or neither."""
    _check_pair(g_a, g_b)
    complemented = _wants_complements(g_a, g_b, policy)
    op_a, op_b = (complement(g_a), complement(g_b)) if complemented else (g_a, g_b)
    return Operators(
        a=_graph_operators(op_a),
        b=_graph_operators(op_b),
        complemented=complemented,
        f_x=normalization_factor(op_a, op_b),
    )


def convergence_iterations(g_a: Graph, g_b: Graph) -> int:
    """Number of propagation rounds: the smaller of the two graph diameters.

    Distances are measured on the undirected versions of the graphs. Scores
    flow both ways through an edge during the updates, so the undirected
    distance is what bounds how far local evidence travels; directed
    reachability would undercount rounds on digraphs with long one-way
    stretches and stop before the tie-breaking noise has separated symmetric
    candidates.
    """
    return min(
        effective_diameter(as_undirected(g_a)),
        effective_diameter(as_undirected(g_b)),
    )


def init_scores(g_a: Graph, g_b: Graph, v: np.ndarray, e: np.ndarray,
                cfg: GasmConfig) -> ScoreState:
    """First vertex-score state from the attribute priors and direct structure.

    x1 = (V + H) entrywise-times the structural edge-pair count, where H is
    i.i.d. uniform on [0, eta), drawn row-major over (u, v) from the seeded
    generator. Direct (non-complement) operators are always used here so the
    edge prior E enters even when the rounds run on complements.
    """
    _check_pair(g_a, g_b)
    if v.shape != (g_a.n, g_b.n):
        raise ValueError(f"vertex prior shape {v.shape}, expected {(g_a.n, g_b.n)}")
    if e.shape != (g_a.m, g_b.m):
        raise ValueError(f"edge prior shape {e.shape}, expected {(g_a.m, g_b.m)}")
    rng = np.random.default_rng(cfg.rng_seed)
    h = rng.random((g_a.n, g_b.n)) * cfg.eta
    ops_a = _graph_operators(g_a)
    ops_b = _graph_operators(g_b)
    structure = sum(oa @ e @ ob.T for oa, ob in zip(ops_a, ops_b))
    return ScoreState(x=(v + h) * structure, y=None, k=1)


def iterate(state: ScoreState, ops: Operators, normalize: bool = True) -> ScoreState:
    """One propagation round: vertex scores -> edge scores -> vertex scores.

    y_ij sums the scores of the endpoint pairs of edges i and j; x_uv sums
    the scores of the incident edge pairs of vertices u and v. A directed
    self-loop is both source and terminus, so it contributes on both sides.
    Normalization divides x by f_x; y is left unscaled (its scale cancels in
    the next round).
    """
    y = sum(oa.T @ state.x @ ob for oa, ob in zip(ops.a, ops.b))
    x = sum(oa @ y @ ob.T for oa, ob in zip(ops.a, ops.b))
    if normalize:
        x = x / ops.f_x
    return ScoreState(x=x, y=y, k=state.k + 1)


def restore_isolated(x: np.ndarray, v: np.ndarray, g_a: Graph, g_b: Graph,
                     f_x: float, rounds: int, normalize: bool = True) -> np.ndarray:
    """Give vertices with no incident edge their attribute prior back.

    Structure says nothing about them (their rows and columns stay at zero
    through every round), so their scores are reset to the vertex prior,
    scaled down to the magnitude the final state would have given them
    (1/f_x per normalized round). A vertex with only a self-loop is not
    isolated; the loop feeds it.
    """
    rows = g_a.isolated_vertices()
    cols = g_b.isolated_vertices()
    if rows.size == 0 and cols.size == 0:
        return x
    scale = f_x ** rounds if normalize else 1.0
    out = x.copy()
    out[rows, :] = v[rows, :] / scale
    out[:, cols] = v[:, cols] / scale
    return out


def run_gasm(g_a: Graph, g_b: Graph, cfg: GasmConfig | None = None,
             ) -> tuple[Matching, ScoreState, RunDiagnostics]:
    """Full pipeline: priors, propagation, isolated restore, assignment.

    Returns the vertex matching, the final score state, and run diagnostics.
    The state's y is always reported over the input edge lists: when the
    rounds ran on complements, edge scores are recomputed from the final
    vertex scores through the direct operators (the iterated y would index
    complement edges, useless to callers).
    """
    cfg = cfg if cfg is not None else GasmConfig()
    _check_pair(g_a, g_b)
    v = joint_distance(g_a.vertex_attributes, g_b.vertex_attributes, (g_a.n, g_b.n))
    e = joint_distance(g_a.edge_attributes, g_b.edge_attributes, (g_a.m, g_b.m))
    ops = structural_operators(g_a, g_b, cfg.complement_policy)
    rounds = cfg.max_iterations if cfg.max_iterations is not None else convergence_iterations(g_a, g_b)

    state = init_scores(g_a, g_b, v, e, cfg)
    means = [float(state.x.mean()) if state.x.size else 0.0]
    for _ in range(rounds):
        state = iterate(state, ops, cfg.normalize)
        means.append(float(state.x.mean()) if state.x.size else 0.0)

    y = state.y
    if ops.complemented:
        direct_a = _graph_operators(g_a)
        direct_b = _graph_operators(g_b)
        y = sum(oa.T @ state.x @ ob for oa, ob in zip(direct_a, direct_b))
    x = restore_isolated(state.x, v, g_a, g_b, ops.f_x, rounds, cfg.normalize)
    state = ScoreState(x=x, y=y, k=state.k)

    assignment = solve_max(x)
    matching = Matching(pairs=assignment.pairs, n_a=g_a.n, n_b=g_b.n,
                        algorithm="gasm", seed=cfg.rng_seed, iterations=rounds)
    diagnostics = RunDiagnostics(iterations=rounds, complemented=ops.complemented,
                                 f_x=ops.f_x, x_means=tuple(means))
    return matching, state, diagnostics


def match_edges(state: ScoreState) -> Matching:
    """Assignment over edge indices from the final edge scores."""
    if state.y is None:
        raise ValueError("state holds no edge scores: run at least one round")
    assignment = solve_max(state.y)
    m_a, m_b = state.y.shape
    return Matching(pairs=assignment.pairs, n_a=m_a, n_b=m_b, algorithm="gasm-edges")
