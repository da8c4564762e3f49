"""Rectangular linear assignment, exact and deterministic.

Backed by scipy's shortest-augmenting-path solver. Ties are broken by the
solver's fixed processing order, so equal inputs always give equal outputs;
any randomness (score perturbation) belongs upstream.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

__all__ = ["Assignment", "solve_max", "solve_min"]


@dataclass(frozen=True)
class Assignment:
    """An injective row -> column selection and its total score."""

    pairs: tuple[tuple[int, int], ...]
    objective: float


def _solve(matrix, maximize: bool) -> Assignment:
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2:
        raise ValueError("assignment input must be a matrix")
    if m.size == 0:
        return Assignment(pairs=(), objective=0.0)
    if not np.all(np.isfinite(m)):
        raise ValueError("assignment input must be finite")
    rows, cols = linear_sum_assignment(m, maximize=maximize)
    objective = float(m[rows, cols].sum())
    pairs = tuple(zip(rows.tolist(), cols.tolist()))
    return Assignment(pairs=pairs, objective=objective)


def solve_max(scores) -> Assignment:
    """Maximize the summed score over assignments of size min(rows, cols)."""
    return _solve(scores, maximize=True)


def solve_min(costs) -> Assignment:
    """Minimize the summed cost; equivalent to solve_max on the negated matrix."""
    return _solve(costs, maximize=False)
