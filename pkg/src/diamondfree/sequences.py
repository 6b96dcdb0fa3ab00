"""Enumeration of arithmetically constrained degree sequences.

A candidate sequence on n vertices is non-increasing with every entry a
positive multiple of three in [3, n-1], and total sum divisible by
twelve (so the edge count is divisible by six).  Enumeration is a
recursive descent over value choices, largest first, which yields the
candidates in decreasing lexicographic order; branches whose achievable
totals cannot reach a multiple of twelve are pruned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graphs import DegreeSequence


@dataclass(frozen=True)
class ArithmeticConstraints:
    """Divisibility and range constraints on a degree sequence.

    ``max_degree`` defaults to n-1 when left as None.
    """

    n: int
    min_degree: int = 3
    max_degree: int | None = None
    degree_modulus: int = 3
    sum_modulus: int = 12

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"negative n: {self.n}")
        if self.min_degree < 1 or self.degree_modulus < 1 or self.sum_modulus < 1:
            raise ValueError("constraint parameters must be positive")

    def resolved_max_degree(self) -> int:
        return self.n - 1 if self.max_degree is None else self.max_degree

    def domain_descending(self) -> tuple[int, ...]:
        """Allowed degree values, largest first."""
        lo, hi, m = self.min_degree, self.resolved_max_degree(), self.degree_modulus
        start = lo + (-lo) % m  # smallest multiple of m that is >= lo
        return tuple(range(hi - (hi - start) % m, start - 1, -m)) if hi >= start else ()

    def allows(self, seq: Sequence[int]) -> bool:
        """True iff seq is a valid candidate of length n under these constraints."""
        vals = list(seq)
        if len(vals) != self.n:
            return False
        if any(a < b for a, b in zip(vals, vals[1:])):
            return False
        dom = set(self.domain_descending())
        if any(v not in dom for v in vals):
            return False
        return sum(vals) % self.sum_modulus == 0


def iter_arithmetic(constraints: ArithmeticConstraints) -> Iterator[DegreeSequence]:
    """Stream candidate sequences in decreasing lexicographic order."""
    n = constraints.n
    dom = constraints.domain_descending()
    if n < 4 or not dom:
        return
    smod = constraints.sum_modulus
    lo = dom[-1]
    prefix: list[int] = []

    def rec(slots: int, cap: int, total: int) -> Iterator[DegreeSequence]:
        if slots == 0:
            if total % smod == 0:
                yield DegreeSequence(tuple(prefix))
            return
        # remaining totals reachable with `slots` values in [lo, cap]:
        # every multiple of the degree modulus in [total + slots*lo,
        # total + slots*cap] is achievable, so prune when no multiple of
        # the sum modulus lands in that window.
        lo_total = total + slots * lo
        hi_total = total + slots * cap
        if (lo_total + smod - 1) // smod * smod > hi_total:
            return
        for v in dom:
            if v > cap:
                continue
            prefix.append(v)
            yield from rec(slots - 1, v, total + v)
            prefix.pop()

    yield from rec(n, dom[0], 0)


def enumerate_arithmetic(n: int) -> list[DegreeSequence]:
    """All candidates on n vertices, decreasing lexicographic order.

    Empty for n < 4: no sequence on fewer vertices can meet the
    degree-range and sum-divisibility constraints.
    """
    return list(iter_arithmetic(ArithmeticConstraints(n)))


def satisfies_arithmetic(seq: Sequence[int], n: int) -> bool:
    """True iff seq would appear in enumerate_arithmetic(n)."""
    if n < 4:
        return False
    return ArithmeticConstraints(n).allows(seq)
