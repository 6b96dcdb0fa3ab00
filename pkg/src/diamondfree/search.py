"""Backtracking search for diamond-free realizations of a degree sequence.

Decision variables are the upper-triangle adjacency cells, taken in
row-major order (0,1), (0,2), ..., (n-2,n-1); value 1 is tried before 0
by default.  Input degrees must be non-increasing, so vertices of equal
degree sit in contiguous blocks.

Propagation at each assignment:
  * degree counting per endpoint: placed edges never exceed the target,
    and the unassigned incident cells must still cover the deficit;
  * incremental diamond detection: adding edge {i,j} fails if i and j
    already share two neighbours, or if the new triangle through a
    common neighbour t gives one of the edges {i,t}, {j,t} a second
    triangle;
  * optional symmetry breaking: for every adjacent pair of equal-degree
    vertices v, v+1, row v must be lexicographically <= row v+1
    (compared as full rows of the adjacency matrix).  Maintained
    incrementally with a per-pair comparison pointer and undo trail;
  * whenever a row completes, an Erdos-Gallai check on the residual
    degrees of the untouched vertices.

Node accounting: every attempted assignment is one node; every failed
attempt and every undo of a placed assignment is one backtrack, so
nodes >= backtracks always holds.

Two engines walk the identical tree: the readable pure-Python one in
this module and a compiled twin in _kernel (used automatically when
available, selectable via SearchConfig.engine).  Their node counts,
backtrack counts, witnesses and exhaustive counts agree exactly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from .errors import Inconclusive
from .graphs import Graph
from .graphical import is_graphical_eg

_LEXSAT = -1  # pair proven strictly smaller, no further checks needed
_LEXOFF = -2  # pair not under symmetry breaking


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the realization search.

    mode is "first" (stop at the first witness) or "count" (exhaust the
    tree and count leaves).  node_limit, when set, bounds attempted
    assignments; exceeding it raises Inconclusive.  presolve enables
    cheap whole-sequence refutations before the tree search: an
    Erdos-Gallai graphicality check, and the bound
    sum(d_i^2) <= m*(n+1), which every diamond-free graph with m edges
    satisfies.  Both refute only sequences with no diamond-free
    realization, so they are safe in either mode.
    """

    symmetry_breaking: bool = True
    node_limit: int | None = None
    mode: str = "first"
    one_first: bool = True
    presolve: bool = True
    engine: str = "auto"

    def __post_init__(self) -> None:
        if self.mode not in ("first", "count"):
            raise ValueError(f"mode must be 'first' or 'count', got {self.mode!r}")
        if self.node_limit is not None and self.node_limit < 1:
            raise ValueError(f"node_limit must be positive, got {self.node_limit}")
        if self.engine not in ("auto", "python", "compiled"):
            raise ValueError(f"engine must be auto, python or compiled, got {self.engine!r}")


@dataclass
class SearchStats:
    nodes: int = 0
    backtracks: int = 0
    wall_time: float = 0.0
    found: bool = False
    count: int = 0
    presolved: bool = False


def _square_sum_bound_holds(targets: Sequence[int]) -> bool:
    # In a diamond-free graph every edge lies in at most one triangle,
    # so 3t = sum over edges of |N(u) & N(v)| >= sum(d^2) - m*n and
    # 3t <= m, giving sum(d^2) <= m*(n+1).
    n = len(targets)
    m = sum(targets) // 2
    return sum(d * d for d in targets) <= m * (n + 1)


_KERNEL_STATE = {"checked": False, "ok": False}


def _kernel_ok() -> bool:
    if not _KERNEL_STATE["checked"]:
        try:
            from . import _kernel  # noqa: F401

            _KERNEL_STATE["ok"] = True
        except ImportError:
            _KERNEL_STATE["ok"] = False
        _KERNEL_STATE["checked"] = True
    return _KERNEL_STATE["ok"]


def _run(targets: tuple[int, ...], cfg: SearchConfig) -> tuple[Graph | None, SearchStats]:
    n = len(targets)
    stats = SearchStats()
    t0 = time.perf_counter()

    def finish(witness: Graph | None) -> tuple[Graph | None, SearchStats]:
        stats.wall_time = time.perf_counter() - t0
        stats.found = witness is not None or stats.count > 0
        return witness, stats

    if any(a < b for a, b in zip(targets, targets[1:])):
        raise ValueError(f"degree sequence must be non-increasing: {targets}")
    if any(d < 0 for d in targets):
        raise ValueError(f"negative degree in {targets}")
    if n == 0 or any(d > n - 1 for d in targets) or sum(targets) % 2:
        return finish(None)
    if cfg.presolve:
        if not is_graphical_eg(targets) or not _square_sum_bound_holds(targets):
            stats.presolved = True
            return finish(None)
    if n == 1:
        # single vertex of degree zero: the empty graph is the unique realization
        if cfg.mode == "count":
            stats.count = 1
            return finish(None)
        return finish(Graph(1, (0,)))

    if cfg.engine == "compiled" or (cfg.engine == "auto" and _kernel_ok()):
        import numpy as np

        from ._kernel import search_kernel

        paired_arr = np.zeros(n, dtype=np.bool_)
        if cfg.symmetry_breaking:
            for v in range(n - 1):
                paired_arr[v] = targets[v] == targets[v + 1]
        adj_out = np.zeros(n, dtype=np.int64)
        limit = -1 if cfg.node_limit is None else cfg.node_limit
        status, cnt, nodes, backs = search_kernel(
            np.array(targets, dtype=np.int64),
            paired_arr,
            cfg.one_first,
            cfg.mode == "count",
            limit,
            adj_out,
        )
        stats.nodes = int(nodes)
        stats.backtracks = int(backs)
        stats.count = int(cnt)
        if status == 2:
            stats.wall_time = time.perf_counter() - t0
            raise Inconclusive(
                f"node limit {cfg.node_limit} reached after {stats.nodes} nodes", stats
            )
        if status == 1:
            return finish(Graph(n, tuple(int(x) for x in adj_out)))
        return finish(None)

    cells_i: list[int] = []
    cells_j: list[int] = []
    for i in range(n):
        for j in range(i + 1, n):
            cells_i.append(i)
            cells_j.append(j)
    M = len(cells_i)

    paired = [cfg.symmetry_breaking and targets[v] == targets[v + 1] for v in range(n - 1)]
    lexptr = [0 if (v < n - 1 and paired[v]) else _LEXOFF for v in range(n)]

    rem = list(targets)
    slack = [n - 1] * n
    adj = [0] * n

    order = (1, 0) if cfg.one_first else (0, 1)
    phase = [0] * (M + 1)
    placed_val = [0] * M
    trail: list[list[tuple[int, int]]] = [[] for _ in range(M)]

    node_limit = cfg.node_limit
    count_mode = cfg.mode == "count"
    witness: Graph | None = None

    def attempt(k: int, v: int) -> bool:
        i = cells_i[k]
        j = cells_j[k]
        if v == 1:
            if rem[i] == 0 or rem[j] == 0:
                return False
            common = adj[i] & adj[j]
            pc = common.bit_count()
            if pc >= 2:
                return False
            if pc == 1:
                t = common.bit_length() - 1
                # edge {i,t} (and {j,t}) would gain triangle {i,j,t}
                if adj[i] & adj[t] or adj[j] & adj[t]:
                    return False
            rem[i] -= 1
            rem[j] -= 1
            slack[i] -= 1
            slack[j] -= 1
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        else:
            if rem[i] > slack[i] - 1 or rem[j] > slack[j] - 1:
                return False
            slack[i] -= 1
            slack[j] -= 1
        placed_val[k] = v

        # lex pointers touched by this cell
        undo = trail[k]
        ok = True
        # pair i-1: row i-1 vs row i at column j
        p = i - 1
        if p >= 0 and lexptr[p] >= 0:
            ptr = lexptr[p]
            if ptr == j:
                a = (adj[p] >> j) & 1
                if a != v:
                    if a:  # row p has 1, row p+1 has 0: p > p+1, violation
                        ok = False
                    else:
                        undo.append((p, ptr))
                        lexptr[p] = _LEXSAT
                else:
                    undo.append((p, ptr))
                    lexptr[p] = j + 1
        if ok:
            if j == i + 1:
                # pair i: columns i and i+1 compare as (0, v) then (v, 0)
                if lexptr[i] >= 0:
                    undo.append((i, lexptr[i]))
                    lexptr[i] = _LEXSAT if v else i + 2
            else:
                # pair j-1: row j-1 vs row j at column i
                p = j - 1
                if lexptr[p] >= 0 and lexptr[p] == i:
                    a = (adj[p] >> i) & 1  # == A[i][j-1], assigned earlier
                    b = v
                    if a != b:
                        if a:
                            ok = False
                        else:
                            undo.append((p, i))
                            lexptr[p] = _LEXSAT
                    else:
                        undo.append((p, i))
                        lexptr[p] = i + 1

        # residual feasibility when row i just completed
        if ok and j == n - 1 and i < n - 2:
            residual = sorted(rem[i + 1 :], reverse=True)
            if residual[0] > n - 2 - i or not is_graphical_eg(residual):
                ok = False

        if ok:
            return True
        # roll back
        for pv, old in undo:
            lexptr[pv] = old
        undo.clear()
        if v == 1:
            rem[i] += 1
            rem[j] += 1
            adj[i] &= ~(1 << j)
            adj[j] &= ~(1 << i)
        slack[i] += 1
        slack[j] += 1
        return False

    def undo_placed(k: int) -> None:
        for pv, old in trail[k]:
            lexptr[pv] = old
        trail[k].clear()
        i = cells_i[k]
        j = cells_j[k]
        if placed_val[k]:
            rem[i] += 1
            rem[j] += 1
            adj[i] &= ~(1 << j)
            adj[j] &= ~(1 << i)
        slack[i] += 1
        slack[j] += 1

    k = 0
    while True:
        if k == M:
            if count_mode:
                stats.count += 1
                k -= 1
                undo_placed(k)
                stats.backtracks += 1
                continue
            witness = Graph(n, tuple(adj))
            break
        if phase[k] >= 2:
            k -= 1
            if k < 0:
                break
            undo_placed(k)
            stats.backtracks += 1
            continue
        v = order[phase[k]]
        phase[k] += 1
        if node_limit is not None and stats.nodes >= node_limit:
            stats.wall_time = time.perf_counter() - t0
            raise Inconclusive(
                f"node limit {node_limit} reached after {stats.nodes} nodes", stats
            )
        stats.nodes += 1
        if attempt(k, v):
            k += 1
            phase[k] = 0
        else:
            stats.backtracks += 1

    return finish(witness)


def find_diamond_free_realization(
    seq: Sequence[int], config: SearchConfig | None = None
) -> tuple[Graph | None, SearchStats]:
    """First diamond-free graph with the given degrees, or None.

    The sequence must be non-increasing.  With symmetry breaking on
    (the default) a witness still exists whenever any realization does:
    the lex constraint only discards reorderings of equal-degree
    vertices.
    """
    cfg = config or SearchConfig()
    if cfg.mode != "first":
        raise ValueError("find_diamond_free_realization requires mode='first'")
    return _run(tuple(seq), cfg)


def count_realizations(
    seq: Sequence[int],
    symmetry_breaking: bool = True,
    small_n_bound: int = 10,
    config: SearchConfig | None = None,
) -> tuple[int, SearchStats]:
    """Exhaustive count of labelled diamond-free realizations.

    Without symmetry breaking the full labelled tree is walked, which is
    only sensible for small n; sequences longer than small_n_bound are
    refused in that case.  A custom config may override mode-independent
    knobs; its mode and symmetry_breaking are forced to count semantics.
    """
    seq = tuple(seq)
    if not symmetry_breaking and len(seq) > small_n_bound:
        raise ValueError(
            f"refusing exhaustive count without symmetry breaking for n={len(seq)} "
            f"> bound {small_n_bound}"
        )
    base = config or SearchConfig(presolve=False)
    cfg = SearchConfig(
        symmetry_breaking=symmetry_breaking,
        node_limit=base.node_limit,
        mode="count",
        one_first=base.one_first,
        presolve=base.presolve,
        engine=base.engine,
    )
    _, stats = _run(seq, cfg)
    return stats.count, stats
