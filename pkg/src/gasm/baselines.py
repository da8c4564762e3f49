"""Reference algorithms the benchmarks compare against.

Two baselines: the similarity-propagation scheme of Zager (structure only,
mean-normalized, no tie-breaking noise, direct operators always) and a plain
2opt local search over permutations. Zager's update rounds are written out
here on purpose rather than borrowed from the engine, so tests can check the
two codepaths against each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .attributes import CATEGORICAL
from .engine import ScoreState, convergence_iterations
from .graph import Graph, adjacency, incidence_unoriented, source_terminus
from .lap import solve_max
from .matching import Matching

__all__ = [
    "ZagerConfig",
    "zager_scores",
    "run_zager",
    "two_opt_permutation",
    "run_two_opt",
]


# ============================================================================
# Zager similarity propagation
# ============================================================================

@dataclass(frozen=True)
class ZagerConfig:
    """max_iterations: propagation rounds (unset -> smaller graph diameter).

    categorical_adjust flips the sign of converged scores for vertex pairs
    whose categorical attributes differ, the scheme's only use of attributes;
    measurable attributes are ignored entirely.
    """

    max_iterations: int | None = None
    categorical_adjust: bool = True

    def __post_init__(self):
        if self.max_iterations is not None and self.max_iterations < 1:
            raise ValueError("max_iterations must be positive when set")


def _operators(g: Graph) -> tuple[np.ndarray, ...]:
    return source_terminus(g) if g.directed else (incidence_unoriented(g),)


def zager_scores(g_a: Graph, g_b: Graph, rounds: int,
                 normalize: bool = True) -> list[ScoreState]:
    """All score states, uniform start through `rounds` propagation rounds.

    Scores start uniform over edge pairs (x1 entries count incident edge
    pairs); each round maps vertex scores to edge scores and back through
    the direct incidence operators. With normalize on, x is divided by its
    mean after every round, which keeps magnitudes bounded and changes no
    assignment; off, raw values are kept for cross-checks against other
    implementations.
    """
    if g_a.directed != g_b.directed:
        raise ValueError("cannot match a directed graph against an undirected one")
    ops_a = _operators(g_a)
    ops_b = _operators(g_b)
    e_uniform = np.ones((g_a.m, g_b.m))
    x = sum(oa @ e_uniform @ ob.T for oa, ob in zip(ops_a, ops_b))
    states = [ScoreState(x=x, y=None, k=1)]
    for _ in range(rounds):
        y = sum(oa.T @ x @ ob for oa, ob in zip(ops_a, ops_b))
        x = sum(oa @ y @ ob.T for oa, ob in zip(ops_a, ops_b))
        if normalize:
            mean = x.mean() if x.size else 0.0
            if mean > 0:
                x = x / mean
        states.append(ScoreState(x=x, y=y, k=states[-1].k + 1))
    return states


def _categorical_signs(g_a: Graph, g_b: Graph) -> np.ndarray | None:
    """+1 where every shared categorical vertex attribute agrees, else -1."""
    cats_a = {a.name: a for a in g_a.vertex_attributes if a.kind == CATEGORICAL}
    cats_b = {a.name: a for a in g_b.vertex_attributes if a.kind == CATEGORICAL}
    shared = sorted(set(cats_a) & set(cats_b))
    if not shared:
        return None
    agree = np.ones((g_a.n, g_b.n), dtype=bool)
    for name in shared:
        va, vb = cats_a[name].values, cats_b[name].values
        for u in range(g_a.n):
            for v in range(g_b.n):
                agree[u, v] &= va[u] == vb[v]
    return np.where(agree, 1.0, -1.0)


def run_zager(g_a: Graph, g_b: Graph, cfg: ZagerConfig | None = None,
              ) -> tuple[Matching, ScoreState]:
    cfg = cfg if cfg is not None else ZagerConfig()
    rounds = cfg.max_iterations if cfg.max_iterations is not None else convergence_iterations(g_a, g_b)
    state = zager_scores(g_a, g_b, rounds, normalize=True)[-1]
    x = state.x
    if cfg.categorical_adjust:
        signs = _categorical_signs(g_a, g_b)
        if signs is not None:
            x = x * signs
            state = ScoreState(x=x, y=state.y, k=state.k)
    assignment = solve_max(x)
    matching = Matching(pairs=assignment.pairs, n_a=g_a.n, n_b=g_b.n,
                        algorithm="zager", iterations=rounds)
    return matching, state


# ============================================================================
# 2opt local search
# ============================================================================

def two_opt_permutation(a, b, minimize: bool = False, seed=None,
                        ) -> tuple[np.ndarray, float]:
    """Locally optimal permutation for sum A[u,v] * B[p(u), p(v)].

    Starts from a seeded uniform permutation and repeatedly applies the
    first strictly improving transposition, scanning pairs (i, j) in
    lexicographic order and restarting the scan after each accepted swap.
    Terminates because every accepted swap strictly improves the objective.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("two_opt_permutation needs two square matrices of equal size")
    n = a.shape[0]
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    p = rng.permutation(n)
    c = b[np.ix_(p, p)]

    sign = -1.0 if minimize else 1.0
    improving = True
    while improving:
        improving = False
        for i in range(n - 1):
            for j in range(i + 1, n):
                delta = _swap_delta(a, c, i, j)
                if sign * delta > 0.0:
                    p[i], p[j] = p[j], p[i]
                    c[[i, j], :] = c[[j, i], :]
                    c[:, [i, j]] = c[:, [j, i]]
                    improving = True
                    break
            if improving:
                break
    return p, float(np.sum(a * c))


def _swap_delta(a: np.ndarray, c: np.ndarray, i: int, j: int) -> float:
    """Objective change from transposing positions i and j, in O(n).

    c is B reindexed by the current permutation; swapping i and j swaps its
    rows i, j and columns i, j. Row and column dot products cover the
    entries with exactly one index in {i, j}; the correction terms remove
    their {i, j} x {i, j} parts, re-added exactly by the corner sum.
    """
    row = np.dot(a[i] - a[j], c[j] - c[i])
    row_corr = ((a[i, i] - a[j, i]) * (c[j, i] - c[i, i])
                + (a[i, j] - a[j, j]) * (c[j, j] - c[i, j]))
    col = np.dot(a[:, i] - a[:, j], c[:, j] - c[:, i])
    col_corr = ((a[i, i] - a[i, j]) * (c[i, j] - c[i, i])
                + (a[j, i] - a[j, j]) * (c[j, j] - c[j, i]))
    corner = ((a[i, i] - a[j, j]) * (c[j, j] - c[i, i])
              + (a[i, j] - a[j, i]) * (c[j, i] - c[i, j]))
    return float(row - row_corr + col - col_corr + corner)


def run_two_opt(g_a: Graph, g_b: Graph, seed=None) -> Matching:
    """2opt over vertex permutations, maximizing shared adjacency.

    Unequal sizes are handled by padding the smaller graph with isolated
    vertices; pairs that land on padding are dropped from the result.
    """
    if g_a.directed != g_b.directed:
        raise ValueError("cannot match a directed graph against an undirected one")
    n = max(g_a.n, g_b.n)
    a = np.zeros((n, n))
    b = np.zeros((n, n))
    a[: g_a.n, : g_a.n] = adjacency(g_a)
    b[: g_b.n, : g_b.n] = adjacency(g_b)
    p, _ = two_opt_permutation(a, b, minimize=False, seed=seed)
    pairs = tuple((u, int(p[u])) for u in range(g_a.n) if p[u] < g_b.n)
    return Matching(pairs=pairs, n_a=g_a.n, n_b=g_b.n, algorithm="2opt",
                    seed=seed if isinstance(seed, int) else None)
