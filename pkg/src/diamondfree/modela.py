"""Single-stage cross-check model.

Instead of the staged enumerate/filter/realize pipeline, this model
branches over the degree vector and the adjacency matrix inside one
search: for each non-increasing assignment of vertex degrees (positive
multiples of three, at most n-1, total divisible by twelve) it looks
for any diamond-free realization, with symmetry breaking switched off.
The degree-vector generator here is written independently of the
pipeline's candidate enumerator so the two models only share the
adjacency search core.

Intended for small n (roughly up to 12); the unbroken adjacency search
grows quickly beyond that.
"""

from __future__ import annotations

from typing import Iterator

from .graphs import DegreeSequence
from .search import SearchConfig, find_diamond_free_realization


def _degree_vectors(n: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing vectors over {3, 6, ...} <= n-1 with sum % 12 == 0."""
    top = n - 1 - (n - 1) % 3
    if n < 4 or top < 3:
        return
    vec: list[int] = []

    def rec(slots: int, cap: int, total: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            if total % 12 == 0:
                yield tuple(vec)
            return
        for v in range(cap, 2, -3):
            vec.append(v)
            yield from rec(slots - 1, v, total + v)
            vec.pop()

    yield from rec(n, top, 0)


def solve_model_a(n: int, node_limit: int | None = None) -> list[DegreeSequence]:
    """Degree sequences of diamond-free graphs on n vertices, found in one stage.

    Returns the realizable sequences in decreasing lexicographic order.
    Raises Inconclusive if any adjacency search exceeds node_limit.
    """
    cfg = SearchConfig(symmetry_breaking=False, node_limit=node_limit)
    out = []
    for vec in _degree_vectors(n):
        graph, _ = find_diamond_free_realization(vec, cfg)
        if graph is not None:
            out.append(DegreeSequence(vec))
    return out
