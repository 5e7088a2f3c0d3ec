"""Signed line graphs.

The line graph of a signed graph has one vertex per edge, in input edge
order.  Two edges meeting at exactly one endpoint w are adjacent, with sign
minus the product of their incidence entries at w, which makes the line
graph adjacency matrix equal 2I - H.T @ H for the incidence matrix H.  With
this convention the line graph of an all-negative graph is the negation of
the classical unsigned line graph, and every eigenvalue is at most 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import SignedGraph

__all__ = ["LineGraphResult", "line_graph"]


@dataclass(frozen=True)
class LineGraphResult:
    """Line graph plus, for each of its edges, the shared endpoint in the
    source graph that produced it."""

    graph: SignedGraph
    edge_origin: dict

    def __post_init__(self):
        object.__setattr__(self, "edge_origin", dict(self.edge_origin))


def line_graph(g: SignedGraph) -> LineGraphResult:
    """Construct the signed line graph of g.

    Vertices are edge indices of g in stored order.  For source edge
    (u, v, s) the incidence entry is +1 at u and -s at v; adjacent edge
    pairs get sign -eta_w(e) * eta_w(f) at their shared endpoint w.  In a
    simple graph two distinct edges share at most one endpoint, which the
    construction asserts.
    """
    incident: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for k, (u, v, s) in enumerate(g.edges):
        incident[u].append((k, 1))
        incident[v].append((k, -s))

    edges = []
    origin: dict[tuple[int, int], int] = {}
    for w in range(g.n):
        here = incident[w]
        for a in range(len(here)):
            e, eta_e = here[a]
            for b in range(a + 1, len(here)):
                f, eta_f = here[b]
                key = (e, f) if e < f else (f, e)
                if key in origin:
                    raise AssertionError(
                        f"edges {key} share two endpoints; graph is not simple"
                    )
                origin[key] = w
                edges.append((key[0], key[1], -eta_e * eta_f))
    return LineGraphResult(SignedGraph(g.m, tuple(edges)), origin)
