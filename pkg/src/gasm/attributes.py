"""Attribute values and the similarity matrices built from them.

An attribute is a named column of values over a graph's vertices or edges.
Comparing one attribute across two graphs yields a dense similarity matrix
with entries in [0, 1]; the error parameter rho widens or sharpens the
contrast. Several attributes combine by elementwise product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "CATEGORICAL",
    "MEASURABLE",
    "Attribute",
    "attribute_distance",
    "default_error",
    "combine",
    "joint_distance",
]

CATEGORICAL = "categorical"
MEASURABLE = "measurable"


@dataclass(frozen=True)
class Attribute:
    """One named attribute: a value per vertex (or per edge) plus an error.

    kind is "categorical" (hashable tokens compared for equality) or
    "measurable" (finite reals compared by difference). error is the
    non-negative rho; leave unset to have it estimated from the data at
    comparison time.
    """

    name: str
    kind: str
    values: tuple
    error: float | None = None

    def __post_init__(self):
        if self.kind not in (CATEGORICAL, MEASURABLE):
            raise ValueError(f"unknown attribute kind {self.kind!r}")
        values = tuple(self.values)
        if self.kind == MEASURABLE:
            values = tuple(float(v) for v in values)
            if not all(math.isfinite(v) for v in values):
                raise ValueError(f"attribute '{self.name}': measurable values must be finite")
        object.__setattr__(self, "values", values)
        if self.error is not None:
            err = float(self.error)
            if not err >= 0:
                raise ValueError(f"attribute '{self.name}': error must be non-negative")
            object.__setattr__(self, "error", err)


def default_error(attr_a: Attribute, attr_b: Attribute) -> float:
    """Spread-based fallback for an unset rho.

    Population standard deviation over all cross pairs: of the value
    differences for measurable attributes, of the equality indicator for
    categorical ones.
    """
    if not attr_a.values or not attr_b.values:
        raise ValueError("cannot estimate an error from empty value vectors")
    if attr_a.kind == MEASURABLE:
        a = np.asarray(attr_a.values, dtype=float)
        b = np.asarray(attr_b.values, dtype=float)
        pairs = a[:, None] - b[None, :]
    else:
        pairs = _equality_matrix(attr_a.values, attr_b.values)
    return float(pairs.std())


def attribute_distance(attr_a: Attribute, attr_b: Attribute) -> np.ndarray:
    """Pairwise similarity matrix between two graphs' values of one attribute.

    Row u, column v compares value u of attr_a with value v of attr_b.
    rho = 0 gives the exact-match indicator; larger rho raises off-match
    entries toward 1. An unset rho resolves to the population spread of the
    cross pairs (exact match when that spread is zero).
    """
    if attr_a.name != attr_b.name:
        raise ValueError(f"attribute name mismatch: {attr_a.name!r} vs {attr_b.name!r}")
    if attr_a.kind != attr_b.kind:
        raise ValueError(f"attribute '{attr_a.name}': kind mismatch")
    if not attr_a.values or not attr_b.values:
        # no cross pairs to score; skips error resolution, which has no
        # population to estimate from
        return np.ones((len(attr_a.values), len(attr_b.values)))
    rho = _resolve_error(attr_a, attr_b)

    if attr_a.kind == CATEGORICAL:
        eq = _equality_matrix(attr_a.values, attr_b.values)
        if rho == 0.0:
            return eq
        off = math.exp(-1.0 / (2.0 * rho * rho))
        return eq + (1.0 - eq) * off

    a = np.asarray(attr_a.values, dtype=float)
    b = np.asarray(attr_b.values, dtype=float)
    diff = a[:, None] - b[None, :]
    if rho == 0.0:
        return (diff == 0.0).astype(float)
    return np.exp(-(diff * diff) / (2.0 * rho * rho))


def _resolve_error(attr_a: Attribute, attr_b: Attribute) -> float:
    if attr_a.error is not None and attr_b.error is not None:
        if attr_a.error != attr_b.error:
            raise ValueError(f"attribute '{attr_a.name}': conflicting errors on the two sides")
        return attr_a.error
    if attr_a.error is not None:
        return attr_a.error
    if attr_b.error is not None:
        return attr_b.error
    return default_error(attr_a, attr_b)


def _equality_matrix(values_a, values_b) -> np.ndarray:
    out = np.empty((len(values_a), len(values_b)))
    for i, x in enumerate(values_a):
        for j, y in enumerate(values_b):
            out[i, j] = 1.0 if x == y else 0.0
    return out


def combine(distances, shape: tuple[int, int]) -> np.ndarray:
    """Elementwise product of similarity matrices; no matrices → all-ones."""
    out = np.ones(shape)
    for d in distances:
        if d.shape != shape:
            raise ValueError(f"distance shape {d.shape} does not match {shape}")
        out = out * d
    return out


def joint_distance(attrs_a, attrs_b, shape: tuple[int, int]) -> np.ndarray:
    """Combined similarity over all shared attributes, paired by name.

    Both sides must carry the same attribute names; comparing against a
    missing column would silently ignore data, so that is an error.
    """
    by_name = {attr.name: attr for attr in attrs_b}
    names_a = [attr.name for attr in attrs_a]
    if len(set(names_a)) != len(names_a):
        raise ValueError("duplicate attribute names")
    if set(names_a) != set(by_name):
        raise ValueError(f"attribute names differ between the two graphs: {sorted(set(names_a) ^ set(by_name))}")
    return combine((attribute_distance(a, by_name[a.name]) for a in attrs_a), shape)
