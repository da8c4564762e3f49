"""Matching and permutation containers shared by the solvers and the metrics."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["Permutation", "Matching"]


@dataclass(frozen=True)
class Permutation:
    """Injective vertex map, used for ground truths and QAP assignments.

    Attributes
    ----------
    mapping : tuple of int
        Entry i is the image of vertex i; length min(n_a, n_b).
    n_a, n_b : int
        Domain and codomain sizes. Images lie in [0, n_b).
    """

    mapping: tuple[int, ...]
    n_a: int
    n_b: int

    def __post_init__(self):
        k = min(self.n_a, self.n_b)
        if len(self.mapping) != k:
            raise ValueError(f"mapping length {len(self.mapping)} != min(n_a, n_b) = {k}")
        if any(not (0 <= v < self.n_b) for v in self.mapping):
            raise ValueError("mapping image out of range")
        if len(set(self.mapping)) != len(self.mapping):
            raise ValueError("mapping is not injective")

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(enumerate(self.mapping))


@dataclass(frozen=True)
class Matching:
    """An injective partial assignment of G_A vertices (or edges) to G_B ones.

    `pairs` holds (index in A, index in B) tuples; provenance fields record
    which solver produced it and with what seed.
    """

    pairs: tuple[tuple[int, int], ...]
    n_a: int
    n_b: int
    algorithm: str = ""
    seed: int | None = None
    iterations: int | None = field(default=None, compare=False)

    def __post_init__(self):
        a_side = [a for a, _ in self.pairs]
        b_side = [b for _, b in self.pairs]
        if len(set(a_side)) != len(a_side) or len(set(b_side)) != len(b_side):
            raise ValueError("matching is not injective")
        if any(not (0 <= a < self.n_a) for a in a_side):
            raise ValueError("A-side index out of range")
        if any(not (0 <= b < self.n_b) for b in b_side):
            raise ValueError("B-side index out of range")

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)


def matched_pairs(m) -> set[tuple[int, int]]:
    """Pair set of a Matching or Permutation (anything exposing .pairs)."""
    return set(m.pairs)
