"""Graph container and structural matrices.

Graphs are immutable after construction: every operation returning a graph
builds a new one. Undirected edges are normalized to (u, v) with u <= v so
duplicate detection is well-defined; edge attribute values follow the edge
list order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .attributes import Attribute

__all__ = [
    "Graph",
    "adjacency",
    "incidence_unoriented",
    "source_terminus",
    "complement",
    "effective_diameter",
    "graph_to_json",
    "graph_from_json",
    "load_graph",
    "save_graph",
]


# ============================================================================
# Graph container
# ============================================================================

@dataclass(frozen=True)
class Graph:
    """A finite simple graph with optional vertex and edge attributes.

    Attributes
    ----------
    directed : bool
        Whether edges are ordered pairs.
    n : int
        Number of vertices, indexed 0..n-1.
    edges : tuple of (int, int)
        Edge list. For undirected graphs each edge is stored once with
        u <= v; (u, v) and (v, u) denote the same edge. Self-loops allowed,
        parallel edges are not.
    vertex_attributes, edge_attributes : tuple of Attribute
        Attribute values aligned with vertex indices / edge list order.
    """

    directed: bool
    n: int
    edges: tuple[tuple[int, int], ...]
    vertex_attributes: tuple[Attribute, ...] = ()
    edge_attributes: tuple[Attribute, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        edges = tuple(
            (int(u), int(v)) if self.directed or u <= v else (int(v), int(u))
            for u, v in self.edges
        )
        object.__setattr__(self, "edges", edges)
        for u, v in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
        if len(set(edges)) != len(edges):
            raise ValueError("duplicate edges")
        for attr in self.vertex_attributes:
            if len(attr.values) != self.n:
                raise ValueError(f"vertex attribute '{attr.name}' has {len(attr.values)} values, expected {self.n}")
        for attr in self.edge_attributes:
            if len(attr.values) != len(edges):
                raise ValueError(f"edge attribute '{attr.name}' has {len(attr.values)} values, expected {len(edges)}")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def loop_count(self) -> int:
        return sum(1 for u, v in self.edges if u == v)

    def degrees(self) -> np.ndarray:
        """Number of incident edges per vertex; a self-loop counts once."""
        deg = np.zeros(self.n, dtype=np.int64)
        for u, v in self.edges:
            deg[u] += 1
            if v != u:
                deg[v] += 1
        return deg

    def isolated_vertices(self) -> np.ndarray:
        """Vertices with no incident edge at all (a looped vertex is not isolated)."""
        return np.flatnonzero(self.degrees() == 0)

    def average_degree(self) -> float:
        """m/n; for directed graphs this is the average out-degree."""
        if self.n == 0:
            raise ValueError("average degree undefined for an empty graph")
        return self.m / self.n


# ============================================================================
# Structural matrices
# ============================================================================

def adjacency(g: Graph) -> np.ndarray:
    """Dense 0/1 adjacency matrix; symmetric for undirected graphs.

    A self-loop sets a single 1 on the diagonal in both cases.
    """
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = 1.0
        if not g.directed:
            a[v, u] = 1.0
    return a


def incidence_unoriented(g: Graph) -> np.ndarray:
    """Vertex-by-edge incidence matrix of an undirected graph.

    Column j has ones at the endpoints of edge j; a self-loop column has a
    single 1.
    """
    if g.directed:
        raise ValueError("incidence_unoriented is defined for undirected graphs")
    r = np.zeros((g.n, g.m))
    for j, (u, v) in enumerate(g.edges):
        r[u, j] = 1.0
        r[v, j] = 1.0
    return r


def source_terminus(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Source and terminus vertex-by-edge matrices of a directed graph.

    S[u, i] = 1 iff edge i starts at u, T[v, i] = 1 iff it ends at v;
    S @ T.T recovers the adjacency matrix.
    """
    if not g.directed:
        raise ValueError("source_terminus is defined for directed graphs")
    s = np.zeros((g.n, g.m))
    t = np.zeros((g.n, g.m))
    for i, (u, v) in enumerate(g.edges):
        s[u, i] = 1.0
        t[v, i] = 1.0
    return s, t


def complement(g: Graph) -> Graph:
    """Complement over the full edge universe, self-loops included.

    The universe has n(n+1)/2 unordered pairs (u <= v) for undirected graphs
    and n^2 ordered pairs for directed ones. Vertex attributes are retained;
    edge attributes cannot carry over and are dropped.
    """
    present = set(g.edges)
    if g.directed:
        universe = ((u, v) for u in range(g.n) for v in range(g.n))
    else:
        universe = ((u, v) for u in range(g.n) for v in range(u, g.n))
    comp_edges = tuple(e for e in universe if e not in present)
    return Graph(
        directed=g.directed,
        n=g.n,
        edges=comp_edges,
        vertex_attributes=g.vertex_attributes,
    )


def effective_diameter(g: Graph) -> int:
    """Largest finite shortest-path distance, floored at 1.

    Uses breadth-first distances respecting edge direction for directed
    graphs; unreachable pairs are ignored. An edgeless graph returns 1.
    """
    if g.n <= 1 or g.m == 0:
        return 1
    rows = [u for u, _ in g.edges]
    cols = [v for _, v in g.edges]
    data = np.ones(g.m)
    adj = csr_matrix((data, (rows, cols)), shape=(g.n, g.n))
    dist = shortest_path(adj, method="D", directed=g.directed, unweighted=True)
    finite = dist[np.isfinite(dist)]
    return max(int(finite.max()), 1)


def as_undirected(g: Graph) -> Graph:
    """Undirected version of a graph: edge directions erased, duplicates merged."""
    if not g.directed:
        return Graph(directed=False, n=g.n, edges=g.edges)
    seen: dict[tuple[int, int], None] = {}
    for u, v in g.edges:
        seen.setdefault((min(u, v), max(u, v)), None)
    return Graph(directed=False, n=g.n, edges=tuple(seen))


# ============================================================================
# JSON serialization
# ============================================================================

def graph_to_json(g: Graph) -> str:
    payload = {
        "directed": g.directed,
        "n": g.n,
        "edges": [[u, v] for u, v in g.edges],
        "vertex_attributes": [_attr_payload(a) for a in g.vertex_attributes],
        "edge_attributes": [_attr_payload(a) for a in g.edge_attributes],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def _attr_payload(attr: Attribute) -> dict:
    return {
        "name": attr.name,
        "kind": attr.kind,
        "values": list(attr.values),
        "error": attr.error,
    }


def graph_from_json(text: str) -> Graph:
    payload = json.loads(text)
    try:
        directed = bool(payload["directed"])
        n = int(payload["n"])
        edges = tuple((int(u), int(v)) for u, v in payload["edges"])
        v_attrs = tuple(_attr_from_payload(a) for a in payload.get("vertex_attributes", []))
        e_attrs = tuple(_attr_from_payload(a) for a in payload.get("edge_attributes", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed graph document: {exc}") from exc
    return Graph(directed=directed, n=n, edges=edges,
                 vertex_attributes=v_attrs, edge_attributes=e_attrs)


def _attr_from_payload(payload: dict) -> Attribute:
    error = payload.get("error")
    return Attribute(
        name=payload["name"],
        kind=payload["kind"],
        values=tuple(payload["values"]),
        error=None if error is None else float(error),
    )


def load_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return graph_from_json(fh.read())


def save_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(graph_to_json(g))
