"""Shared fuzz helpers. Oracles live next to the tests that use them."""
from __future__ import annotations

import sys

import numpy as np

from gasm import CATEGORICAL, MEASURABLE, Attribute, Graph


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # repeat the acceptance verdict lines after the test tally so they
    # survive output capture
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


def random_graph(rng, n_max=8, directed=None, loops=True, p=0.4) -> Graph:
    n = int(rng.integers(1, n_max + 1))
    if directed is None:
        directed = bool(rng.integers(0, 2))
    edges = []
    for u in range(n):
        for v in range(n if directed else u, n):
            if u == v and not loops:
                continue
            if rng.random() < p:
                edges.append((u, v))
    return Graph(directed=directed, n=n, edges=tuple(edges))


def attach_attributes(rng, g: Graph, n_vertex=1, n_edge=1) -> Graph:
    from dataclasses import replace

    vattrs = []
    for i in range(n_vertex):
        if rng.random() < 0.5:
            values = tuple(int(x) for x in rng.integers(0, 3, size=g.n))
            vattrs.append(Attribute(name=f"v{i}", kind=CATEGORICAL, values=values))
        else:
            values = tuple(float(x) for x in rng.normal(size=g.n))
            vattrs.append(Attribute(name=f"v{i}", kind=MEASURABLE, values=values))
    eattrs = [
        Attribute(
            name=f"e{i}",
            kind=MEASURABLE,
            values=tuple(float(x) for x in rng.normal(size=g.m)),
        )
        for i in range(n_edge)
    ]
    return replace(g, vertex_attributes=tuple(vattrs), edge_attributes=tuple(eattrs))
