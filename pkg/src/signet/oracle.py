"""Brute-force oracles used to cross-check the production algorithms.

Everything here is deliberately independent of the main implementations:
components come from union-find rather than the BFS in ``graphs``, balance
is decided by exhaustive cycle enumeration or exhaustive switching, and
matrix rank is computed exactly over the integers.
"""

from __future__ import annotations

import itertools

import numpy as np

from .graphs import SignedGraph

__all__ = [
    "balance_by_cycles",
    "balance_by_switching",
    "rank_exact",
]

_CYCLE_CAP = 10
_SWITCH_CAP = 16


def _union_find_components(g: SignedGraph) -> list[list[int]]:
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values(), key=min)


def balance_by_cycles(g: SignedGraph) -> list[tuple[frozenset[int], bool]]:
    """Decide balance per component by enumerating every simple cycle.

    Returns (vertex set, balanced) pairs sorted by smallest vertex.  A
    component is balanced exactly when no enumerated cycle has negative
    sign product.  Exponential; capped at n <= 10.
    """
    if g.n > _CYCLE_CAP:
        raise ValueError(f"cycle enumeration capped at n <= {_CYCLE_CAP}, got {g.n}")
    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for u, v, s in g.edges:
        nbrs[u].append((v, s))
        nbrs[v].append((u, s))

    components = _union_find_components(g)
    comp_of = {}
    for i, comp in enumerate(components):
        for v in comp:
            comp_of[v] = i
    has_negative_cycle = [False] * len(components)

    def extend(start: int, here: int, sign: int, on_path: list[bool], depth: int):
        for nxt, s in nbrs[here]:
            if nxt == start and depth >= 3:
                if sign * s < 0:
                    has_negative_cycle[comp_of[start]] = True
            elif nxt > start and not on_path[nxt]:
                on_path[nxt] = True
                extend(start, nxt, sign * s, on_path, depth + 1)
                on_path[nxt] = False

    for start in range(g.n):
        on_path = [False] * g.n
        on_path[start] = True
        extend(start, start, 1, on_path, 1)

    return [
        (frozenset(comp), not has_negative_cycle[i])
        for i, comp in enumerate(components)
    ]


def balance_by_switching(g: SignedGraph) -> bool:
    """Decide balance of the whole graph by trying every switching.

    For each component the first vertex is pinned to +1 and the remaining
    2**(k-1) sign patterns are tried; the graph is balanced when every
    component admits a pattern making all its edges positive.  Capped at
    n <= 16.
    """
    if g.n > _SWITCH_CAP:
        raise ValueError(f"switching search capped at n <= {_SWITCH_CAP}, got {g.n}")
    for comp in _union_find_components(g):
        edges = [(u, v, s) for u, v, s in g.edges if u in comp and v in comp]
        if not edges:
            continue
        index = {v: i for i, v in enumerate(comp)}
        k = len(comp)
        found = False
        for pattern in itertools.product((1, -1), repeat=k - 1):
            signs = (1,) + pattern
            if all(signs[index[u]] * s * signs[index[v]] == 1 for u, v, s in edges):
                found = True
                break
        if not found:
            return False
    return True


def rank_exact(matrix) -> int:
    """Matrix rank over the rationals by fraction-free Gaussian elimination.

    Input must have integer entries; all arithmetic stays in exact Python
    integers (Bareiss updates), so there is no pivot tolerance to tune.
    """
    a = np.asarray(matrix)
    if a.ndim != 2:
        raise ValueError("rank_exact expects a 2-d matrix")
    if a.size and not np.issubdtype(a.dtype, np.integer):
        rounded = np.rint(a)
        if not np.array_equal(a, rounded):
            raise ValueError("rank_exact expects integer entries")
        a = rounded.astype(np.int64)
    rows = [[int(x) for x in row] for row in a]
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    rank = 0
    prev = 1
    r = 0
    for col in range(nc):
        pivot_row = next((i for i in range(r, nr) if rows[i][col] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        p = rows[r][col]
        for i in range(r + 1, nr):
            f = rows[i][col]
            for j in range(col + 1, nc):
                num = rows[i][j] * p - f * rows[r][j]
                q, rem = divmod(num, prev)
                if rem:
                    # Bareiss divisions are exact; a remainder means a bug.
                    raise AssertionError("non-exact division in fraction-free elimination")
                rows[i][j] = q
            rows[i][col] = 0
        prev = p
        rank += 1
        r += 1
        if r == nr:
            break
    return rank
