"""Matching evaluation: accuracy, structural quality, QAP scores, ceilings.

The analytic ceilings give the best average accuracy any matcher can reach
on families with interchangeable vertices (automorphisms make some pairs
undecidable); benchmarks compare measured means against them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, adjacency
from .matching import Matching

__all__ = [
    "MatchingResult",
    "accuracy",
    "structural_quality",
    "qap_similarity",
    "qap_cost",
    "score_ratio",
    "theoretical_accuracy",
    "peak_edge_probability",
]


@dataclass(frozen=True)
class MatchingResult:
    """One evaluated matching; gamma is None when no ground truth exists."""

    matching: Matching
    gamma: float | None
    q_s: float
    algorithm: str
    seed: int | None = None
    iterations: int | None = None


def accuracy(matching, ground_truth) -> float:
    """Fraction of ground-truth pairs the matching reproduces.

    The denominator is the ground-truth size, so for subgraph tasks (truth
    defined only on the surviving vertices) it is the subgraph order.
    """
    if (matching.n_a, matching.n_b) != (ground_truth.n_a, ground_truth.n_b):
        raise ValueError("matching and ground truth cover different vertex sets")
    truth_pairs = set(ground_truth.pairs)
    if not truth_pairs:
        raise ValueError("empty ground truth")
    return len(set(matching.pairs) & truth_pairs) / len(truth_pairs)


def structural_quality(g_a: Graph, g_b: Graph, matching) -> float:
    """1 minus the normalized edge-mismatch count induced by the matching.

    An edge whose matched endpoints are not connected in the other graph is
    a mismatch; the normalization makes 1 mean perfect edge correspondence
    and keeps the value in [0, 1]. Both graphs edgeless scores 0 (nothing
    structural was matched).
    """
    if g_a.m == 0 and g_b.m == 0:
        return 0.0
    lam_a = adjacency(g_a)
    lam_b = adjacency(g_b)
    m = np.zeros((g_a.n, g_b.n))
    for u, v in matching.pairs:
        m[u, v] = 1.0
    z = lam_a @ m - m @ lam_b
    mismatch = float(np.sum(z * z))
    if g_a.directed:
        denom = g_a.m + g_b.m
    else:
        denom = 2 * (g_a.m + g_b.m) - g_a.loop_count - g_b.loop_count
    return 1.0 - mismatch / denom


def qap_similarity(g_a: Graph, g_b: Graph, matching) -> float:
    """Shared adjacency under the matching: sum of A[u,v] * B[p(u),p(v)].

    Undirected edges count once per direction. This is the quantity 2opt
    maximizes on graphs.
    """
    if not matching.pairs:
        return 0.0
    lam_a = adjacency(g_a)
    lam_b = adjacency(g_b)
    rows = [u for u, _ in matching.pairs]
    cols = [v for _, v in matching.pairs]
    return float(np.sum(lam_a[np.ix_(rows, rows)] * lam_b[np.ix_(cols, cols)]))


def qap_cost(a, b, permutation) -> float:
    """tr(A P B^T P^T) = sum over u, v of A[u,v] * B[p(u), p(v)]."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    p = np.asarray(getattr(permutation, "mapping", permutation), dtype=int)
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("qap_cost needs two square matrices of equal size")
    if p.shape != (a.shape[0],):
        raise ValueError("permutation length does not match the matrices")
    return float(np.sum(a * b[np.ix_(p, p)]))


def score_ratio(alg_score: float, best_known: float) -> float:
    """phi = algorithm score / best known score.

    Both zero compares equal, phi = 1. A positive score against a zero best
    known returns inf; report writers flag such rows instead of printing an
    unbounded number.
    """
    if alg_score < 0 or best_known < 0:
        raise ValueError("scores must be non-negative")
    if best_known == 0:
        return 1.0 if alg_score == 0 else math.inf
    return alg_score / best_known


def theoretical_accuracy(kind: str, **params) -> float:
    """Best reachable average accuracy for the symmetric benchmark families.

    kinds and parameters:
      binary_tree(h)          -> (h+1) / (2^(h+1) - 1)
      star_branched(k, beta)  -> (beta+1) / (k*beta + 1)
      circular_ladder(c)      -> 1 / (2c)
      vertex_degradation(n_a, delta_v, alpha)
                              -> 1/n_a + (1 - 1/n_a) * exp(-delta_v / alpha)
    """
    if kind == "binary_tree":
        h = params["h"]
        if h < 0:
            raise ValueError("depth must be non-negative")
        return (h + 1) / (2 ** (h + 1) - 1)
    if kind == "star_branched":
        k, beta = params["k"], params["beta"]
        if k < 1 or beta < 1:
            raise ValueError("require k >= 1 and beta >= 1")
        return (beta + 1) / (k * beta + 1)
    if kind == "circular_ladder":
        c = params["c"]
        if c < 3:
            raise ValueError("require c >= 3")
        return 1.0 / (2 * c)
    if kind == "vertex_degradation":
        n_a, delta_v, alpha = params["n_a"], params["delta_v"], params["alpha"]
        if n_a < 1 or alpha <= 0:
            raise ValueError("require n_a >= 1 and alpha > 0")
        return 1.0 / n_a + (1.0 - 1.0 / n_a) * math.exp(-delta_v / alpha)
    raise ValueError(f"unknown family {kind!r}")


def peak_edge_probability(n_a: int) -> float:
    """Edge probability maximizing subgraph-matching accuracy: 2 / n_A."""
    if n_a < 2:
        raise ValueError("require n_a >= 2")
    return 2.0 / n_a
