"""Hill-climbing construction of pair-covering block designs.

Two randomized climbs in the Stinson style, both maintaining a partial
linear space (every pair of points in at most one block):

  * triple systems: pick a point x with uncovered pairs and two live
    partners y, z; if pair {y,z} is uncovered, add block {x,y,z},
    otherwise switch: remove the block {w,y,z} covering it (releasing
    pairs {w,y} and {w,z}) and add {x,y,z}.  Block count increases or
    stays equal, never decreases.

  * block size 4: a triple is live when all three of its pairs are
    uncovered; two live triples overlapping in two points, say {x,y,z}
    and {x,y,w}, combine into a candidate block {x,y,z,w}.  If pair
    {z,w} is uncovered the block is added outright; otherwise the block
    covering {z,w} is removed first.  The climb runs while some
    overlapping pair of live triples exists, so it stops either complete
    or in a state whose uncovered-pairs graph has no edge in two
    triangles, i.e. is diamond-free.

Liveness is derived throughout: a pair is live iff no block covers it,
a triple is live iff its three pairs are live.  Both climbs keep that
state incrementally and can re-derive it from scratch for checking.
The printed forms of the original algorithms leave the switch
bookkeeping ambiguous; deriving liveness from coverage is the one
reading under which the documented termination structure holds.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import Inconclusive
from .graphs import DegreeSequence, Graph, is_diamond_free

DEFAULT_MAX_ITERATIONS = 10_000_000


@dataclass(frozen=True)
class RngSpec:
    """Seeded, platform-independent source of random choices.

    algorithm names the generator; only "mt19937" (the stdlib
    Mersenne Twister, identical streams on every platform) is
    supported.  Same seed, same choice stream.
    """

    seed: int
    algorithm: str = "mt19937"

    def __post_init__(self) -> None:
        if self.algorithm != "mt19937":
            raise ValueError(f"unknown rng algorithm {self.algorithm!r}")

    def make(self) -> random.Random:
        return random.Random(self.seed)


def _as_rng(rng: "RngSpec | int") -> random.Random:
    if isinstance(rng, RngSpec):
        return rng.make()
    return RngSpec(int(rng)).make()


@dataclass(frozen=True)
class Design:
    """A partial linear space: blocks of points with every pair in at most one block.

    blocks are stored canonically: each block sorted ascending, blocks
    sorted lexicographically.  Block sizes 3 and 4 are allowed (mixed
    structures occur as partial results).
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"point count must be positive, got {self.n}")
        seen_pairs = set()
        for blk in self.blocks:
            if len(blk) not in (3, 4):
                raise ValueError(f"block {blk} has size {len(blk)}, expected 3 or 4")
            if any(not 0 <= p < self.n for p in blk):
                raise ValueError(f"block {blk} out of range for n={self.n}")
            if any(a >= b for a, b in zip(blk, blk[1:])):
                raise ValueError(f"block {blk} not sorted strictly ascending")
            for pair in combinations(blk, 2):
                if pair in seen_pairs:
                    raise ValueError(f"pair {pair} covered twice")
                seen_pairs.add(pair)
        if any(a > b for a, b in zip(self.blocks, self.blocks[1:])):
            raise ValueError("blocks not sorted lexicographically")

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Sequence[int]]) -> "Design":
        return cls(n, tuple(sorted(tuple(sorted(b)) for b in blocks)))

    def covered_pairs(self) -> set[tuple[int, int]]:
        out: set[tuple[int, int]] = set()
        for blk in self.blocks:
            out.update(combinations(blk, 2))
        return out

    def covers_all_pairs(self) -> bool:
        """True iff every 2-subset of points lies in exactly one block."""
        return sum(len(b) * (len(b) - 1) // 2 for b in self.blocks) == self.n * (self.n - 1) // 2

    def block_counts(self) -> list[int]:
        """Number of blocks through each point."""
        counts = [0] * self.n
        for blk in self.blocks:
            for p in blk:
                counts[p] += 1
        return counts

    def to_text(self) -> str:
        return "".join(f"({','.join(str(p) for p in blk)})\n" for blk in self.blocks)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "blocks": [list(b) for b in self.blocks]})

    @classmethod
    def from_json(cls, text: str) -> "Design":
        obj = json.loads(text)
        if not isinstance(obj, dict) or set(obj) != {"n", "blocks"}:
            raise ValueError("design JSON must be an object with keys 'n' and 'blocks'")
        blocks = obj["blocks"]
        if not isinstance(blocks, list) or not all(
            isinstance(b, list) and all(isinstance(p, int) for p in b) for b in blocks
        ):
            raise ValueError("'blocks' must be a list of lists of integers")
        return cls(obj["n"], tuple(tuple(b) for b in blocks))


@dataclass(frozen=True)
class StructureReport:
    """Classification of a block structure via its uncovered-pairs graph."""

    is_complete_design: bool
    s4: int
    complement: Graph
    complement_diamond_free: bool
    complement_degrees_div3: bool
    complement_edges_div6: bool
    points_in_max_blocks: int

    def to_json_dict(self) -> dict:
        return {
            "is_complete_design": self.is_complete_design,
            "s4": self.s4,
            "complement": {"n": self.complement.n, "edges": [list(e) for e in self.complement.edges()]},
            "complement_diamond_free": self.complement_diamond_free,
            "complement_degrees_div3": self.complement_degrees_div3,
            "complement_edges_div6": self.complement_edges_div6,
            "points_in_max_blocks": self.points_in_max_blocks,
        }


def uncovered_pairs_graph(d: Design) -> Graph:
    """Graph on the points whose edges are exactly the pairs in no block."""
    covered = d.covered_pairs()
    edges = [p for p in combinations(range(d.n), 2) if p not in covered]
    return Graph.from_edges(d.n, edges)


def classify_structure(d: Design) -> StructureReport:
    comp = uncovered_pairs_graph(d)
    degs = comp.degree_list()
    return StructureReport(
        is_complete_design=comp.edge_count() == 0,
        s4=len(d.blocks),
        complement=comp,
        complement_diamond_free=is_diamond_free(comp),
        complement_degrees_div3=all(dv % 3 == 0 for dv in degs),
        complement_edges_div6=comp.edge_count() % 6 == 0,
        points_in_max_blocks=sum(1 for c in d.block_counts() if c == 5),
    )


def complement_degree_sequence(d: Design) -> DegreeSequence:
    """Degrees of the uncovered-pairs graph, sorted non-increasing."""
    return DegreeSequence.sorted_from(uncovered_pairs_graph(d).degree_list())


class _PairCover:
    """Symmetric pair -> block-id map with swap-remove block storage."""

    def __init__(self, n: int):
        self.n = n
        self.cov = [[-1] * n for _ in range(n)]
        self.blocks: list[tuple[int, ...]] = []

    def covered(self, a: int, b: int) -> bool:
        return self.cov[a][b] >= 0

    def add_block(self, pts: tuple[int, ...]) -> None:
        bid = len(self.blocks)
        self.blocks.append(pts)
        for a, b in combinations(pts, 2):
            assert self.cov[a][b] < 0, f"pair ({a},{b}) already covered"
            self.cov[a][b] = bid
            self.cov[b][a] = bid

    def remove_block(self, bid: int) -> tuple[int, ...]:
        pts = self.blocks[bid]
        for a, b in combinations(pts, 2):
            self.cov[a][b] = -1
            self.cov[b][a] = -1
        last = self.blocks.pop()
        if bid < len(self.blocks):
            self.blocks[bid] = last
            for a, b in combinations(last, 2):
                self.cov[a][b] = bid
                self.cov[b][a] = bid
        return pts

    def check(self) -> None:
        """Re-derive coverage from blocks and compare (debug aid)."""
        fresh = [[-1] * self.n for _ in range(self.n)]
        for bid, pts in enumerate(self.blocks):
            for a, b in combinations(pts, 2):
                assert fresh[a][b] < 0, f"pair ({a},{b}) in two blocks"
                fresh[a][b] = bid
                fresh[b][a] = bid
        assert fresh == self.cov, "incremental pair coverage out of sync"


def stinson_sts(
    n: int,
    rng: RngSpec | int,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
    check_invariants: bool = False,
) -> Design:
    """Hill-climb a Steiner triple system on n points.

    Requires n % 6 in {1, 3} (the admissible orders).  Terminates with a
    complete system of n(n-1)/6 blocks; max_iterations is a safety valve
    only and exceeding it raises Inconclusive.
    """
    if n < 1 or n % 6 not in (1, 3):
        raise ValueError(f"no triple system exists on {n} points (need n % 6 in {{1, 3}})")
    gen = _as_rng(rng)
    state = _PairCover(n)
    # live_adj[x]: bitmask of partners y with pair {x,y} uncovered
    full = (1 << n) - 1
    live_adj = [full & ~(1 << x) for x in range(n)]

    def cover(a: int, b: int) -> None:
        live_adj[a] &= ~(1 << b)
        live_adj[b] &= ~(1 << a)

    def uncover(a: int, b: int) -> None:
        live_adj[a] |= 1 << b
        live_adj[b] |= 1 << a

    target = n * (n - 1) // 6
    iterations = 0
    while len(state.blocks) < target:
        if iterations >= max_iterations:
            raise Inconclusive(
                f"triple system on {n} points not completed in {max_iterations} iterations"
            )
        iterations += 1
        live_points = [x for x in range(n) if live_adj[x]]
        x = live_points[gen.randrange(len(live_points))]
        partners = _bits(live_adj[x])
        i1 = gen.randrange(len(partners))
        i2 = gen.randrange(len(partners) - 1)
        if i2 >= i1:
            i2 += 1
        y, z = partners[i1], partners[i2]
        if state.covered(y, z):
            # switch: displace the block through {y,z}, freeing its
            # other two pairs
            old = state.remove_block(state.cov[y][z])
            for a, b in combinations(old, 2):
                uncover(a, b)
        blk = tuple(sorted((x, y, z)))
        state.add_block(blk)
        for a, b in combinations(blk, 2):
            cover(a, b)
        if check_invariants:
            state.check()
            for v in range(n):
                expect = 0
                for u in range(n):
                    if u != v and not state.covered(u, v):
                        expect |= 1 << u
                assert live_adj[v] == expect, f"live pairs of {v} out of sync"
    return Design.from_blocks(n, state.blocks)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


class _TripleState(_PairCover):
    """Pair coverage plus derived live-triple buckets.

    live3[a][b] is a bitmask of points t such that the triple {a,b,t}
    is live, i.e. pairs {a,b}, {a,t}, {b,t} are all uncovered.  Stored
    symmetrically, with cnt[a][b] caching the popcount.  Each triple
    appears in its three buckets; two distinct live triples overlap in
    two points exactly when some bucket holds both their third points,
    so the number of overlapping pairs of live triples is
    sum over buckets of C(cnt, 2), kept incrementally in self.weight.
    """

    def __init__(self, n: int):
        super().__init__(n)
        self.live3 = [[0] * n for _ in range(n)]
        self.cnt = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                if a != b:
                    self.live3[a][b] = ((1 << n) - 1) & ~(1 << a) & ~(1 << b)
                    self.cnt[a][b] = n - 2
        k = n - 2
        self.weight = (n * (n - 1) // 2) * (k * (k - 1) // 2) if n >= 2 else 0

    def _flip(self, p: int, q: int, t: int, on: bool) -> None:
        # toggle third point t in bucket {p,q}; caller guarantees a real change
        bit = 1 << t
        k = self.cnt[p][q]
        if on:
            self.live3[p][q] |= bit
            self.live3[q][p] |= bit
            self.cnt[p][q] = self.cnt[q][p] = k + 1
            self.weight += k  # C(k+1,2) - C(k,2)
        else:
            self.live3[p][q] &= ~bit
            self.live3[q][p] &= ~bit
            self.cnt[p][q] = self.cnt[q][p] = k - 1
            self.weight -= k - 1

    def refresh_pair(self, a: int, b: int) -> None:
        """Recompute liveness of every triple containing pair {a,b}."""
        cov = self.cov
        ab_live = cov[a][b] < 0
        cov_a = cov[a]
        cov_b = cov[b]
        mask = self.live3[a][b]
        for t in range(self.n):
            if t == a or t == b:
                continue
            new_live = ab_live and cov_a[t] < 0 and cov_b[t] < 0
            if new_live == bool((mask >> t) & 1):
                continue
            self._flip(a, b, t, new_live)
            self._flip(a, t, b, new_live)
            self._flip(b, t, a, new_live)

    def add_block4(self, pts: tuple[int, ...]) -> None:
        self.add_block(pts)
        for a, b in combinations(pts, 2):
            self.refresh_pair(a, b)

    def remove_block4(self, bid: int) -> tuple[int, ...]:
        pts = self.remove_block(bid)
        for a, b in combinations(pts, 2):
            self.refresh_pair(a, b)
        return pts

    def check_triples(self) -> None:
        self.check()
        weight = 0
        for a in range(self.n):
            for b in range(self.n):
                if a == b:
                    continue
                expect = 0
                for t in range(self.n):
                    if t not in (a, b) and not self.covered(a, b) \
                            and not self.covered(a, t) and not self.covered(b, t):
                        expect |= 1 << t
                assert self.live3[a][b] == expect, f"live triples of ({a},{b}) out of sync"
                k = expect.bit_count()
                assert self.cnt[a][b] == k, f"bucket count of ({a},{b}) out of sync"
                if a < b:
                    weight += k * (k - 1) // 2
        assert self.weight == weight, "overlap weight out of sync"


def stinson_four(
    n: int,
    rng: RngSpec | int,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
    check_invariants: bool = False,
) -> tuple[Design, StructureReport]:
    """Hill-climb a block-size-4 structure on n points.

    Complete designs are only possible when n % 12 is 1 or 4; any
    positive n is accepted and may end at a partial structure.  The
    climb runs while two live triples overlap in two points, so on exit
    the structure is either complete or its uncovered-pairs graph is
    diamond-free.  Exceeding max_iterations raises Inconclusive.
    """
    if n < 1:
        raise ValueError(f"point count must be positive, got {n}")
    gen = _as_rng(rng)
    state = _TripleState(n)
    iterations = 0
    while True:
        weight = state.weight
        if weight == 0:
            break
        if iterations >= max_iterations:
            raise Inconclusive(
                f"block-size-4 climb on {n} points still moving after {max_iterations} iterations"
            )
        iterations += 1
        r = gen.randrange(weight)
        x = y = -1
        k = 0
        for a in range(n):
            row = state.cnt[a]
            for b in range(a + 1, n):
                k = row[b]
                w = k * (k - 1) // 2
                if r < w:
                    x, y = a, b
                    break
                r -= w
            if x >= 0:
                break
        thirds = _bits(state.live3[x][y])
        p = 0
        while r >= k - 1 - p:
            r -= k - 1 - p
            p += 1
        z, w_pt = thirds[p], thirds[p + 1 + r]
        if state.covered(z, w_pt):
            old_id = state.cov[z][w_pt]
            if check_invariants:
                shared = set(state.blocks[old_id]) & {x, y, z, w_pt}
                assert shared == {z, w_pt}, f"displaced block shares {shared}"
            state.remove_block4(old_id)
        state.add_block4(tuple(sorted((x, y, z, w_pt))))
        if check_invariants:
            state.check_triples()
    design = Design.from_blocks(n, state.blocks)
    return design, classify_structure(design)
