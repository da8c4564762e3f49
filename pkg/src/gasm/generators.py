"""Graph families for benchmarks, plus the shuffle and degradation steps.

Every random function takes an explicit seed (or an already-built numpy
Generator); nothing reads global RNG state. Rounding of fractional counts is
half-away-from-zero so a given ratio always maps to the same integer.
"""

from __future__ import annotations

import math

import numpy as np

from .graph import Graph
from .attributes import Attribute
from .matching import Permutation

__all__ = [
    "er_gnp",
    "balanced_binary_tree",
    "star_branched",
    "circular_ladder",
    "shuffle_vertices",
    "degrade_edges",
    "degrade_vertices",
]


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def round_half_away(x: float) -> int:
    """round() half-ties go to even; benchmark ratios need 0.5 -> 1, 2.5 -> 3."""
    if x < 0:
        return -round_half_away(-x)
    return int(math.floor(x + 0.5))


# ============================================================================
# Families
# ============================================================================

def er_gnp(n: int, p: float, directed: bool = False, seed=None) -> Graph:
    """Erdos-Renyi G(n, p): each admissible edge kept independently.

    Self-loops are never generated; the admissible pairs are u < v for
    undirected graphs and all ordered u != v for directed ones.
    """
    if n < 0 or not 0.0 <= p <= 1.0:
        raise ValueError("require n >= 0 and 0 <= p <= 1")
    rng = _rng(seed)
    if directed:
        draw = rng.random((n, n)) < p
        np.fill_diagonal(draw, False)
        rows, cols = np.nonzero(draw)
    else:
        rows, cols = np.triu_indices(n, k=1)
        keep = rng.random(rows.size) < p
        rows, cols = rows[keep], cols[keep]
    edges = tuple(zip(rows.tolist(), cols.tolist()))
    return Graph(directed=directed, n=n, edges=edges)


def balanced_binary_tree(h: int) -> Graph:
    """Complete binary tree of depth h, heap-indexed: children of i are 2i+1, 2i+2."""
    if h < 0:
        raise ValueError("depth must be non-negative")
    n = 2 ** (h + 1) - 1
    edges = tuple((i, c) for i in range(n) for c in (2 * i + 1, 2 * i + 2) if c < n)
    return Graph(directed=False, n=n, edges=edges)


def star_branched(k: int, beta: int) -> Graph:
    """k paths of beta vertices each, all attached to a single hub (vertex 0)."""
    if k < 1 or beta < 1:
        raise ValueError("require k >= 1 and beta >= 1")
    edges = []
    for arm in range(k):
        base = 1 + arm * beta
        edges.append((0, base))
        edges.extend((base + i, base + i + 1) for i in range(beta - 1))
    return Graph(directed=False, n=k * beta + 1, edges=tuple(edges))


def circular_ladder(c: int) -> Graph:
    """Two c-cycles (0..c-1 and c..2c-1) joined by the c rungs i -- i+c."""
    if c < 3:
        raise ValueError("require c >= 3")
    cycle_a = [(i, (i + 1) % c) for i in range(c)]
    cycle_b = [(c + i, c + (i + 1) % c) for i in range(c)]
    rungs = [(i, c + i) for i in range(c)]
    return Graph(directed=False, n=2 * c, edges=tuple(cycle_a + cycle_b + rungs))


# ============================================================================
# Shuffle and degradation
# ============================================================================

def shuffle_vertices(g: Graph, seed=None) -> tuple[Graph, Permutation]:
    """Uniformly random vertex relabeling; returns the copy and the truth map.

    The returned permutation sends each original index to its new label.
    Edge list order is preserved, so edge attribute values carry over as-is.
    """
    rng = _rng(seed)
    sigma = rng.permutation(g.n)
    edges = tuple((int(sigma[u]), int(sigma[v])) for u, v in g.edges)
    inverse = np.argsort(sigma)
    v_attrs = tuple(
        Attribute(a.name, a.kind, tuple(a.values[i] for i in inverse), a.error)
        for a in g.vertex_attributes
    )
    shuffled = Graph(directed=g.directed, n=g.n, edges=edges,
                     vertex_attributes=v_attrs, edge_attributes=g.edge_attributes)
    truth = Permutation(mapping=tuple(int(x) for x in sigma), n_a=g.n, n_b=g.n)
    return shuffled, truth


def degrade_edges(g: Graph, delta_e: float, seed=None) -> Graph:
    """Remove round(delta_e * m) edges uniformly without replacement.

    Surviving edges keep their order and attribute values; vertices are
    untouched.
    """
    if not 0.0 <= delta_e <= 1.0:
        raise ValueError("edge removal ratio must lie in [0, 1]")
    rng = _rng(seed)
    n_remove = round_half_away(delta_e * g.m)
    drop = set(rng.choice(g.m, size=n_remove, replace=False).tolist())
    kept = [i for i in range(g.m) if i not in drop]
    e_attrs = tuple(
        Attribute(a.name, a.kind, tuple(a.values[i] for i in kept), a.error)
        for a in g.edge_attributes
    )
    return Graph(directed=g.directed, n=g.n,
                 edges=tuple(g.edges[i] for i in kept),
                 vertex_attributes=g.vertex_attributes, edge_attributes=e_attrs)


def degrade_vertices(g: Graph, delta_v: float, seed=None) -> tuple[Graph, tuple[int, ...]]:
    """Keep a uniform random subset of n - round(delta_v * n) vertices.

    The induced subgraph retains exactly the edges with both endpoints kept,
    reindexed over the kept vertices in increasing original order. Returns
    the subgraph and the sorted kept indices.
    """
    if not 0.0 <= delta_v <= 1.0:
        raise ValueError("vertex removal ratio must lie in [0, 1]")
    rng = _rng(seed)
    n_keep = g.n - round_half_away(delta_v * g.n)
    kept = sorted(rng.choice(g.n, size=n_keep, replace=False).tolist())
    new_index = {old: new for new, old in enumerate(kept)}
    edge_rows = [i for i, (u, v) in enumerate(g.edges) if u in new_index and v in new_index]
    edges = tuple((new_index[g.edges[i][0]], new_index[g.edges[i][1]]) for i in edge_rows)
    v_attrs = tuple(
        Attribute(a.name, a.kind, tuple(a.values[i] for i in kept), a.error)
        for a in g.vertex_attributes
    )
    e_attrs = tuple(
        Attribute(a.name, a.kind, tuple(a.values[i] for i in edge_rows), a.error)
        for a in g.edge_attributes
    )
    sub = Graph(directed=g.directed, n=n_keep, edges=edges,
                vertex_attributes=v_attrs, edge_attributes=e_attrs)
    return sub, tuple(kept)
