"""Bitset-backed simple graphs with diamond detection.

A diamond is a set of four vertices spanning at least five of the six
possible edges (a K4 minus at most one edge).  A graph is diamond-free
exactly when no edge lies in two triangles, i.e. every adjacent pair of
vertices has at most one common neighbour.  The fast predicate here uses
the common-neighbour formulation; a literal four-subset scan, kept
deliberately separate, lives in the independent witness checker.

Adjacency rows are Python ints used as bitmasks, so neighbourhood
intersections are single AND operations and degree counts are popcounts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class GraphFormatError(ValueError):
    """A serialized graph could not be parsed."""


@dataclass(frozen=True)
class DegreeSequence:
    """A non-increasing tuple of vertex degrees.

    Behaves like a read-only sequence of ints; ``text()`` gives the
    space-separated form used in tables and on the command line.
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        for v in vals:
            if v < 0:
                raise ValueError(f"negative degree {v}")
        if any(a < b for a, b in zip(vals, vals[1:])):
            raise ValueError(f"degrees not non-increasing: {vals}")

    @classmethod
    def sorted_from(cls, values: Iterable[int]) -> "DegreeSequence":
        return cls(tuple(sorted(values, reverse=True)))

    @classmethod
    def from_text(cls, text: str) -> "DegreeSequence":
        try:
            return cls(tuple(int(tok) for tok in text.split()))
        except ValueError as exc:
            raise ValueError(f"bad degree sequence {text!r}: {exc}") from None

    def text(self) -> str:
        return " ".join(str(v) for v in self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, idx):
        return self.values[idx]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``rows[i]`` is a bitmask with bit j set iff the edge {i, j} is
    present.  Instances are immutable; construction rejects loops,
    out-of-range bits and asymmetric adjacency.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {i} has neighbour bits outside 0..{self.n - 1}")
            if (row >> i) & 1:
                raise ValueError(f"loop at vertex {i}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if ((self.rows[i] >> j) & 1) != ((self.rows[j] >> i) & 1):
                    raise ValueError(f"adjacency not symmetric at {{{i},{j}}}")

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        rows = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {{{u},{v}}} out of range for n={n}")
            if u == v:
                raise ValueError(f"loop edge at vertex {u}")
            if (rows[u] >> v) & 1:
                raise ValueError(f"duplicate edge {{{u},{v}}}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "Graph":
        n = len(matrix)
        rows = []
        for i, row in enumerate(matrix):
            if len(row) != n:
                raise ValueError(f"matrix row {i} has length {len(row)}, expected {n}")
            bits = 0
            for j, cell in enumerate(row):
                if cell not in (0, 1):
                    raise ValueError(f"matrix cell ({i},{j}) is {cell!r}, expected 0 or 1")
                bits |= cell << j
            rows.append(bits)
        return cls(n, tuple(rows))

    def matrix(self) -> list[list[int]]:
        return [[(self.rows[i] >> j) & 1 for j in range(self.n)] for i in range(self.n)]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        row = self.rows[v]
        return [u for u in range(self.n) if (row >> u) & 1]

    def degree_of(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degree_list(self) -> list[int]:
        """Degrees in vertex order (not sorted)."""
        return [row.bit_count() for row in self.rows]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (i, j) with i < j, lexicographically sorted."""
        out = []
        for i in range(self.n):
            row = self.rows[i] >> (i + 1) << (i + 1)
            while row:
                j = (row & -row).bit_length() - 1
                out.append((i, j))
                row &= row - 1
        return out

    # --- serialization -------------------------------------------------

    def to_text(self) -> str:
        lines = [str(self.n)]
        for i in range(self.n):
            lines.append(" ".join(str((self.rows[i] >> j) & 1) for j in range(self.n)))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise GraphFormatError("empty graph text")
        try:
            n = int(lines[0])
        except ValueError:
            raise GraphFormatError(f"bad vertex count line {lines[0]!r}") from None
        if n < 1:
            raise GraphFormatError(f"bad vertex count {n}")
        if len(lines) != n + 1:
            raise GraphFormatError(f"expected {n} matrix rows, got {len(lines) - 1}")
        matrix = []
        for ln in lines[1:]:
            toks = ln.split()
            if len(toks) != n or any(t not in ("0", "1") for t in toks):
                raise GraphFormatError(f"bad matrix row {ln!r}")
            matrix.append([int(t) for t in toks])
        try:
            return cls.from_matrix(matrix)
        except ValueError as exc:
            raise GraphFormatError(str(exc)) from None

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.edges()]})

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"bad JSON: {exc}") from None
        if not isinstance(obj, dict) or set(obj) != {"n", "edges"}:
            raise GraphFormatError("JSON graph must be an object with keys 'n' and 'edges'")
        n = obj["n"]
        if not isinstance(n, int) or n < 1:
            raise GraphFormatError(f"bad vertex count {n!r}")
        edges = obj["edges"]
        if not isinstance(edges, list):
            raise GraphFormatError("'edges' must be a list")
        pairs = []
        for e in edges:
            if (not isinstance(e, list) or len(e) != 2
                    or not all(isinstance(x, int) for x in e) or not e[0] < e[1]):
                raise GraphFormatError(f"bad edge entry {e!r}")
            pairs.append((e[0], e[1]))
        try:
            return cls.from_edges(n, pairs)
        except ValueError as exc:
            raise GraphFormatError(str(exc)) from None


def degrees(g: Graph) -> DegreeSequence:
    """Degree sequence of g, sorted non-increasing."""
    return DegreeSequence.sorted_from(g.degree_list())


def edges_among(g: Graph, quad: Sequence[int]) -> int:
    """Number of edges of g inside a 4-subset of vertices."""
    vs = tuple(quad)
    if len(vs) != 4 or len(set(vs)) != 4:
        raise ValueError(f"need four distinct vertices, got {vs}")
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return sum(1 for a, b in combinations(vs, 2) if (g.rows[a] >> b) & 1)


def is_diamond_free(g: Graph) -> bool:
    """True iff no 4-subset of vertices spans 5 or more edges.

    Uses the edge formulation: diamond-free iff every edge {u, v} has
    |N(u) & N(v)| <= 1, i.e. no edge lies in two triangles.
    """
    for u in range(g.n):
        row = g.rows[u] >> (u + 1) << (u + 1)
        while row:
            v = (row & -row).bit_length() - 1
            if (g.rows[u] & g.rows[v]).bit_count() >= 2:
                return False
            row &= row - 1
    return True


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full & ~row) & ~(1 << i) for i, row in enumerate(g.rows)))
