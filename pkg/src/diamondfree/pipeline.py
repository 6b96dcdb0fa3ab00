"""Staged pipeline from vertex count to realizable degree sequences.

Stage 1 enumerates the arithmetically constrained candidates, stage 2
drops non-graphical ones via Havel-Hakimi, stage 3 runs the diamond-free
realization search on each survivor.  Results keep the enumeration
order (decreasing lexicographic), so output is deterministic and
independent of the worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .graphs import DegreeSequence, Graph
from .graphical import is_graphical_hh
from .search import SearchConfig, SearchStats, find_diamond_free_realization
from .sequences import enumerate_arithmetic


@dataclass(frozen=True)
class SequenceResult:
    """Outcome of the realization search for one candidate sequence."""

    sequence: DegreeSequence
    graph: Graph | None
    stats: SearchStats

    @property
    def realizable(self) -> bool:
        return self.graph is not None


def _realize_worker(args: tuple[tuple[int, ...], int | None]) -> tuple[Graph | None, SearchStats]:
    values, node_limit = args
    return find_diamond_free_realization(values, SearchConfig(node_limit=node_limit))


def solve_sequences(
    n: int, node_limit: int | None = None, jobs: int = 1
) -> list[SequenceResult]:
    """Realizable-or-not verdicts for every graphical candidate on n vertices.

    Returns one SequenceResult per candidate that passed the
    graphicality filter, in enumeration order.  jobs > 1 fans the
    searches out over processes; the output is identical either way.
    Raises Inconclusive if any single search exceeds node_limit.
    """
    if jobs < 1:
        raise ValueError(f"jobs must be positive, got {jobs}")
    survivors = [s for s in enumerate_arithmetic(n) if is_graphical_hh(s)]
    tasks = [(s.values, node_limit) for s in survivors]
    if jobs == 1 or len(tasks) <= 1:
        outcomes = [_realize_worker(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_realize_worker, tasks))
    return [
        SequenceResult(seq, graph, stats)
        for seq, (graph, stats) in zip(survivors, outcomes)
    ]


def realizable_sequences(n: int, node_limit: int | None = None, jobs: int = 1) -> list[DegreeSequence]:
    """Just the realizable sequences, decreasing lexicographic order."""
    return [r.sequence for r in solve_sequences(n, node_limit=node_limit, jobs=jobs) if r.realizable]
