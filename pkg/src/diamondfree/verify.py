"""Independent witness verification.

This module deliberately shares no code with the graph type or the
search: it re-parses the serialized witness from scratch into a plain
list-of-lists matrix and applies literal, definition-level checks:
cell-by-cell symmetry and zero diagonal, a full scan of all C(n,4)
four-subsets counting edges, a recount of the row sums against the
claimed degree sequence, and the divisibility rules (every degree
positive and divisible by three, total divisible by twelve) applied to
the recounted degrees.  Anything the fast bitset predicates might get
wrong, this module would catch.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence


class WitnessFormatError(ValueError):
    """The serialized witness could not be parsed at all."""


@dataclass(frozen=True)
class VerificationReport:
    simple_ok: bool
    diamond_free_ok: bool
    degrees_match_ok: bool
    arithmetic_ok: bool
    failure_detail: str | None = None

    @property
    def passed(self) -> bool:
        return (
            self.simple_ok
            and self.diamond_free_ok
            and self.degrees_match_ok
            and self.arithmetic_ok
        )


def _parse_text(text: str) -> list[list[int]]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise WitnessFormatError("empty witness text")
    try:
        n = int(lines[0])
    except ValueError:
        raise WitnessFormatError(f"bad vertex count line {lines[0]!r}") from None
    if n < 1:
        raise WitnessFormatError(f"bad vertex count {n}")
    if len(lines) != n + 1:
        raise WitnessFormatError(f"expected {n} matrix rows, got {len(lines) - 1}")
    matrix = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != n or any(t not in ("0", "1") for t in toks):
            raise WitnessFormatError(f"bad matrix row {ln!r}")
        matrix.append([int(t) for t in toks])
    return matrix


def _parse_json(text: str) -> list[list[int]]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WitnessFormatError(f"bad JSON: {exc}") from None
    if not isinstance(obj, dict) or set(obj) != {"n", "edges"}:
        raise WitnessFormatError("JSON witness must be an object with keys 'n' and 'edges'")
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise WitnessFormatError(f"bad vertex count {n!r}")
    if not isinstance(obj["edges"], list):
        raise WitnessFormatError("'edges' must be a list")
    matrix = [[0] * n for _ in range(n)]
    for e in obj["edges"]:
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(x, int) for x in e)):
            raise WitnessFormatError(f"bad edge entry {e!r}")
        u, v = e
        if not (0 <= u < n and 0 <= v < n) or u >= v:
            raise WitnessFormatError(f"bad edge entry {e!r}")
        if matrix[u][v]:
            raise WitnessFormatError(f"duplicate edge {e!r}")
        matrix[u][v] = 1
        matrix[v][u] = 1
    return matrix


def parse_witness(serialized: str) -> list[list[int]]:
    """Parse the text or JSON witness form into a plain 0/1 matrix.

    Raises WitnessFormatError when the input is not parseable at all;
    shape-correct but semantically bad matrices (asymmetry, loops) are
    left for verify_witness to report.
    """
    if serialized.lstrip().startswith("{"):
        return _parse_json(serialized)
    return _parse_text(serialized)


def verify_witness(serialized: str, seq: Sequence[int], n: int) -> VerificationReport:
    """Check a serialized witness graph against a claimed degree sequence.

    Never raises on dimension problems: those come back as a report
    with every flag false and a failure_detail.  Only unparseable input
    raises WitnessFormatError.
    """
    matrix = parse_witness(serialized)
    claimed = list(seq)
    if len(matrix) != n or len(claimed) != n:
        return VerificationReport(
            False, False, False, False,
            failure_detail=(
                f"dimension mismatch: matrix is {len(matrix)}x{len(matrix)}, "
                f"sequence has {len(claimed)} entries, claimed n={n}"
            ),
        )

    detail = None

    simple_ok = True
    for i in range(n):
        if matrix[i][i] != 0:
            simple_ok = False
            detail = detail or f"nonzero diagonal at vertex {i}"
        for j in range(i + 1, n):
            if matrix[i][j] != matrix[j][i]:
                simple_ok = False
                detail = detail or f"asymmetric cells ({i},{j})"

    diamond_free_ok = True
    for quad in combinations(range(n), 4):
        edge_count = sum(matrix[a][b] for a, b in combinations(quad, 2))
        if edge_count > 4:
            diamond_free_ok = False
            detail = detail or f"vertices {quad} span {edge_count} edges"
            break

    recounted = sorted((sum(row) for row in matrix), reverse=True)
    degrees_match_ok = recounted == claimed
    if not degrees_match_ok:
        detail = detail or f"recounted degrees {recounted} != claimed {claimed}"

    arithmetic_ok = (
        all(d > 0 and d % 3 == 0 for d in recounted) and sum(recounted) % 12 == 0
    )
    if not arithmetic_ok:
        detail = detail or "recounted degrees break the divisibility rules"

    return VerificationReport(simple_ok, diamond_free_ok, degrees_match_ok, arithmetic_ok, detail)
