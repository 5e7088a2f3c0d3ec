"""Constructors for standard signed-graph families.

Paths and cycles take a count r of negative edges, placed on the first r
edges in traversal order v0v1, v1v2, ...  Grids, cylinders and tori are
Cartesian products of two paths, a cycle and a path, and two cycles; only
the parities of the r values affect spectra and balance.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass

from .graphs import SignedGraph
from .products import cartesian

__all__ = [
    "path",
    "cycle",
    "complete",
    "grid",
    "cylinder",
    "torus",
    "random_signed_graph",
    "FamilySpec",
    "parse_family",
    "build_family",
    "from_family_string",
]


def path(n: int, r: int = 0) -> SignedGraph:
    """Path on n vertices with the first r edges negative."""
    n = operator.index(n)
    r = operator.index(r)
    if n < 1:
        raise ValueError("path needs n >= 1")
    if not 0 <= r <= max(n - 1, 0):
        raise ValueError(f"negative edge count r={r} out of range 0..{n - 1}")
    edges = tuple((i, i + 1, -1 if i < r else 1) for i in range(n - 1))
    return SignedGraph(n, edges)


def cycle(n: int, r: int = 0) -> SignedGraph:
    """Cycle on n >= 3 vertices with the first r traversal edges negative."""
    n = operator.index(n)
    r = operator.index(r)
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    if not 0 <= r <= n:
        raise ValueError(f"negative edge count r={r} out of range 0..{n}")
    traversal = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    edges = tuple(
        (u, v, -1 if k < r else 1) for k, (u, v) in enumerate(traversal)
    )
    return SignedGraph(n, edges)


def complete(n: int, sign: int = 1) -> SignedGraph:
    """Complete graph on n >= 1 vertices with every edge carrying sign."""
    n = operator.index(n)
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    edges = tuple(
        (u, v, sign) for u in range(n) for v in range(u + 1, n)
    )
    return SignedGraph(n, edges)


def grid(m: int, r1: int, n: int, r2: int) -> SignedGraph:
    """Cartesian product of path(m, r1) and path(n, r2)."""
    return cartesian([path(m, r1), path(n, r2)])


def cylinder(m: int, r1: int, n: int, r2: int) -> SignedGraph:
    """Cartesian product of cycle(m, r1) and path(n, r2)."""
    return cartesian([cycle(m, r1), path(n, r2)])


def torus(m: int, r1: int, n: int, r2: int) -> SignedGraph:
    """Cartesian product of cycle(m, r1) and cycle(n, r2)."""
    return cartesian([cycle(m, r1), cycle(n, r2)])


def random_signed_graph(rng, n: int, p: float) -> SignedGraph:
    """Seeded uniform model: each pair is an edge with probability p,
    each edge sign uniform.  Used by the test corpus and verify suites."""
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, 1 if rng.random() < 0.5 else -1))
    return SignedGraph(n, tuple(edges))


# ---------------------------------------------------------------------------
# family strings (CLI surface): kind:key=value,...
# ---------------------------------------------------------------------------

_FAMILY_KEYS = {
    "path": {"n", "r"},
    "cycle": {"n", "r"},
    "complete": {"n", "sign"},
    "grid": {"m", "r1", "n", "r2"},
    "cylinder": {"m", "r1", "n", "r2"},
    "torus": {"m", "r1", "n", "r2"},
}


@dataclass(frozen=True)
class FamilySpec:
    """Parsed family description: a kind plus integer parameters."""

    kind: str
    params: dict


def _parse_sign(text: str) -> int:
    if text in ("+", "+1", "1"):
        return 1
    if text in ("-", "-1"):
        return -1
    raise ValueError(f"bad sign value {text!r}, expected + or -")


def parse_family(text: str) -> FamilySpec:
    kind, _, rest = text.partition(":")
    kind = kind.strip()
    if kind not in _FAMILY_KEYS:
        raise ValueError(
            f"unknown family kind {kind!r}, expected one of {sorted(_FAMILY_KEYS)}"
        )
    allowed = _FAMILY_KEYS[kind]
    params: dict = {}
    if rest.strip():
        for item in rest.split(","):
            key, eq, value = item.partition("=")
            key = key.strip()
            value = value.strip()
            if not eq or not value:
                raise ValueError(f"malformed family parameter {item!r}")
            if key not in allowed:
                raise ValueError(f"family {kind!r} does not take key {key!r}")
            if key in params:
                raise ValueError(f"duplicate family key {key!r}")
            if key == "sign":
                params[key] = _parse_sign(value)
            else:
                try:
                    params[key] = int(value)
                except ValueError:
                    raise ValueError(f"family key {key!r} needs an integer, got {value!r}") from None
    return FamilySpec(kind, params)


def build_family(spec: FamilySpec) -> SignedGraph:
    params = dict(spec.params)
    try:
        if spec.kind == "path":
            return path(params.pop("n"), params.pop("r", 0))
        if spec.kind == "cycle":
            return cycle(params.pop("n"), params.pop("r", 0))
        if spec.kind == "complete":
            return complete(params.pop("n"), params.pop("sign", 1))
        return {"grid": grid, "cylinder": cylinder, "torus": torus}[spec.kind](
            params.pop("m"), params.pop("r1", 0), params.pop("n"), params.pop("r2", 0)
        )
    except KeyError as missing:
        raise ValueError(f"family {spec.kind!r} is missing key {missing}") from None


def from_family_string(text: str) -> SignedGraph:
    """One-step parse and build, e.g. ``from_family_string("cycle:n=5,r=2")``."""
    return build_family(parse_family(text))
