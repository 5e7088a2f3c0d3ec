"""Signed graphs: data model, matrices, switching and balance.

A signed graph is a simple loop-free graph in which every edge carries a
sign +1 or -1.  The sign of a cycle is the product of its edge signs, and a
graph is balanced when every cycle is positive, equivalently when some
vertex switching makes all edges positive.
"""

from __future__ import annotations

import json
import operator
from dataclasses import dataclass

import numpy as np

__all__ = [
    "SignedGraph",
    "ComponentReport",
    "BalanceReport",
    "adjacency",
    "degrees",
    "degree_matrix",
    "laplacian",
    "incidence",
    "negate",
    "underlying",
    "switch",
    "balance_report",
    "to_json_dict",
    "from_json_dict",
    "dumps",
    "loads",
]


@dataclass(frozen=True)
class SignedGraph:
    """Simple graph on vertices 0..n-1 whose edges are signed +1 or -1.

    Edges are canonicalised to ``(u, v, sign)`` with ``u < v`` and stored
    sorted lexicographically, so equal graphs compare equal and every
    derived matrix is reproducible.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        try:
            n = operator.index(self.n)
        except TypeError:
            raise ValueError(f"vertex count must be an integer, got {self.n!r}") from None
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        canon = []
        for edge in self.edges:
            try:
                u, v, s = edge
                u = operator.index(u)
                v = operator.index(v)
                s = operator.index(s)
            except (TypeError, ValueError):
                raise ValueError(f"malformed edge {edge!r}") from None
            if not 0 <= u < v < n:
                raise ValueError(f"edge {edge!r} violates 0 <= u < v < {n}")
            if s not in (1, -1):
                raise ValueError(f"edge {edge!r} has sign {s}, expected +1 or -1")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            canon.append((u, v, s))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)


@dataclass(frozen=True)
class ComponentReport:
    """One connected component together with its balance verdict."""

    vertices: tuple[int, ...]
    balanced: bool


@dataclass(frozen=True)
class BalanceReport:
    """Balance decomposition of a signed graph.

    ``b`` counts balanced components, ``c`` all components and ``c_b`` the
    components whose underlying graph is bipartite.  ``switch`` holds a
    per-vertex switching certificate assigned along a spanning tree; on a
    balanced component switching by it makes every edge positive.
    """

    components: tuple[ComponentReport, ...]
    switch: tuple[int, ...]
    b: int
    c: int
    c_b: int

    @property
    def balanced(self) -> bool:
        return self.b == self.c


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


def adjacency(g: SignedGraph) -> np.ndarray:
    """Signed adjacency matrix with entries in {-1, 0, 1}."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v, s in g.edges:
        a[u, v] = s
        a[v, u] = s
    return a


def degrees(g: SignedGraph) -> np.ndarray:
    """Unsigned vertex degrees."""
    d = np.zeros(g.n, dtype=np.int64)
    for u, v, _ in g.edges:
        d[u] += 1
        d[v] += 1
    return d


def degree_matrix(g: SignedGraph) -> np.ndarray:
    return np.diag(degrees(g))


def laplacian(g: SignedGraph) -> np.ndarray:
    """Signed Laplacian D - A.  Positive semidefinite for every signature."""
    return degree_matrix(g) - adjacency(g)


def incidence(g: SignedGraph) -> np.ndarray:
    """Vertex-edge incidence matrix H with H @ H.T == laplacian(g).

    The column of edge (u, v, s) holds +1 at the lower endpoint u and -s at
    the higher endpoint v, so the two nonzero entries multiply to -s.
    """
    h = np.zeros((g.n, g.m), dtype=np.int64)
    for k, (u, v, s) in enumerate(g.edges):
        h[u, k] = 1
        h[v, k] = -s
    return h


# ---------------------------------------------------------------------------
# signature operations
# ---------------------------------------------------------------------------


def negate(g: SignedGraph) -> SignedGraph:
    """Flip the sign of every edge."""
    return SignedGraph(g.n, tuple((u, v, -s) for u, v, s in g.edges))


def underlying(g: SignedGraph) -> SignedGraph:
    """The all-positive graph on the same edge set."""
    return SignedGraph(g.n, tuple((u, v, 1) for u, v, _ in g.edges))


def switch(g: SignedGraph, signs) -> SignedGraph:
    """Switch at the vertex set given by a +1/-1 vector.

    Edge (u, v, s) becomes (u, v, signs[u] * s * signs[v]); spectra and
    balance are invariant under this operation.
    """
    values = [operator.index(x) for x in signs]
    if len(values) != g.n:
        raise ValueError(f"switching vector has length {len(values)}, expected {g.n}")
    if any(x not in (1, -1) for x in values):
        raise ValueError("switching vector entries must be +1 or -1")
    return SignedGraph(
        g.n, tuple((u, v, values[u] * s * values[v]) for u, v, s in g.edges)
    )


def _adjacency_lists(g: SignedGraph) -> list[list[tuple[int, int]]]:
    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for u, v, s in g.edges:
        nbrs[u].append((v, s))
        nbrs[v].append((u, s))
    return nbrs


def balance_report(g: SignedGraph) -> BalanceReport:
    """Decompose into components and decide balance of each.

    A breadth-first spanning tree fixes a tentative switching (root +1,
    child = parent * edge sign); the component is balanced exactly when all
    non-tree edges also become positive under it.  The same sweep two-colours
    the underlying graph to count bipartite components.
    """
    nbrs = _adjacency_lists(g)
    comp_id = [-1] * g.n
    sigma = [1] * g.n
    colour = [0] * g.n
    comp_vertices: list[list[int]] = []
    for root in range(g.n):
        if comp_id[root] != -1:
            continue
        cid = len(comp_vertices)
        comp_id[root] = cid
        members = [root]
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v, s in nbrs[u]:
                if comp_id[v] == -1:
                    comp_id[v] = cid
                    sigma[v] = sigma[u] * s
                    colour[v] = 1 - colour[u]
                    members.append(v)
                    queue.append(v)
        comp_vertices.append(sorted(members))

    c = len(comp_vertices)
    comp_balanced = [True] * c
    comp_bipartite = [True] * c
    for u, v, s in g.edges:
        cid = comp_id[u]
        if sigma[u] * s * sigma[v] != 1:
            comp_balanced[cid] = False
        if colour[u] == colour[v]:
            comp_bipartite[cid] = False

    components = tuple(
        ComponentReport(tuple(vs), comp_balanced[i])
        for i, vs in enumerate(comp_vertices)
    )
    return BalanceReport(
        components=components,
        switch=tuple(sigma),
        b=sum(comp_balanced),
        c=c,
        c_b=sum(comp_bipartite),
    )


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------


def to_json_dict(g: SignedGraph) -> dict:
    return {"n": g.n, "edges": [[u, v, s] for u, v, s in g.edges]}


def from_json_dict(obj) -> SignedGraph:
    """Build a graph from {"n": int, "edges": [[u, v, sign], ...]}.

    Rejects loops, duplicate edges, out-of-range endpoints, bad signs and
    unknown keys.
    """
    if not isinstance(obj, dict):
        raise ValueError("graph document must be a JSON object")
    extra = set(obj) - {"n", "edges"}
    if extra:
        raise ValueError(f"unknown graph keys: {sorted(extra)}")
    if "n" not in obj:
        raise ValueError('graph document missing "n"')
    n = obj["n"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise ValueError('"n" must be an integer')
    edges = obj.get("edges", [])
    if not isinstance(edges, list):
        raise ValueError('"edges" must be a list')
    parsed = []
    for item in edges:
        if not isinstance(item, list) or len(item) != 3:
            raise ValueError(f"edge entries must be [u, v, sign] triples, got {item!r}")
        if any(isinstance(x, bool) or not isinstance(x, int) for x in item):
            raise ValueError(f"edge entries must be integers, got {item!r}")
        parsed.append(tuple(item))
    return SignedGraph(n, tuple(parsed))


def dumps(g: SignedGraph) -> str:
    """Canonical single-line JSON text (stable for sorted edge lists)."""
    return json.dumps(to_json_dict(g))


def loads(text: str) -> SignedGraph:
    return from_json_dict(json.loads(text))
