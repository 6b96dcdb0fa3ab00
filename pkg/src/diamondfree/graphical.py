"""Graphicality tests and a constructive realizer.

Two independent routes decide whether a non-negative integer sequence is
the degree sequence of some simple graph: a Havel-Hakimi reduction and
the Erdos-Gallai inequalities.  They are kept separate on purpose so
each can serve as an oracle for the other.  ``realize_any`` builds one
concrete (not necessarily diamond-free) realization greedily.
"""

from __future__ import annotations

from typing import Sequence

from .graphs import Graph


def _validated(seq: Sequence[int]) -> list[int]:
    vals = []
    for v in seq:
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"degree {v!r} is not an integer")
        if v < 0:
            raise ValueError(f"negative degree {v}")
        vals.append(v)
    return vals


def is_graphical_hh(seq: Sequence[int]) -> bool:
    """Havel-Hakimi: repeatedly satisfy the largest remaining degree."""
    d = sorted(_validated(seq), reverse=True)
    if not d:
        return True
    if sum(d) % 2 or d[0] > len(d) - 1:
        return False
    while d and d[0] > 0:
        k = d.pop(0)
        if k > len(d):
            return False
        for i in range(k):
            d[i] -= 1
            if d[i] < 0:
                return False
        d.sort(reverse=True)
    return True


def is_graphical_eg(seq: Sequence[int]) -> bool:
    """Erdos-Gallai: even sum and the k-th partial-sum inequalities."""
    d = sorted(_validated(seq), reverse=True)
    n = len(d)
    if sum(d) % 2:
        return False
    lhs = 0
    for k in range(1, n + 1):
        lhs += d[k - 1]
        rhs = k * (k - 1) + sum(min(di, k) for di in d[k:])
        if lhs > rhs:
            return False
    return True


def realize_any(seq: Sequence[int]) -> Graph | None:
    """One simple graph with the given degrees, or None.

    Greedy Havel-Hakimi construction: take the vertex with the largest
    remaining demand and join it to the next-largest demands, breaking
    ties by lowest vertex index.  Deterministic.
    """
    demands = _validated(seq)
    n = len(demands)
    if n == 0:
        return None
    if sum(demands) % 2 or any(d > n - 1 for d in demands):
        return None
    pool = [[d, v] for v, d in enumerate(demands)]
    edges: list[tuple[int, int]] = []
    for _ in range(n):
        pool.sort(key=lambda p: (-p[0], p[1]))
        k, u = pool[0]
        if k == 0:
            break
        if k > len(pool) - 1:
            return None
        pool[0][0] = 0
        for p in pool[1 : k + 1]:
            if p[0] == 0:
                return None
            p[0] -= 1
            a, b = sorted((u, p[1]))
            edges.append((a, b))
    return Graph.from_edges(n, edges)
