"""Shared fixtures.

The n=8..16 solve is the expensive part of the suite, so it runs once
per session (through the real CLI, witness emission included) and the
acceptance tests all read from it.  Criterion verdict lines are
collected here and replayed in the terminal summary so a plain
`pytest -v` run shows one PASS/FAIL line per criterion.
"""

import time
from pathlib import Path

import pytest

from diamondfree import cli

GOLDEN_TABLE = Path(__file__).resolve().parent.parent / "goldens" / "solution_table_8_16.txt"

CRITERION_LINES = []


def record_criterion(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    CRITERION_LINES.append(line)
    print(line)
    assert ok, line


@pytest.fixture
def record():
    return record_criterion


def pytest_terminal_summary(terminalreporter):
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERION_LINES):
            terminalreporter.write_line(line)


class GoldenRun:
    def __init__(self, stdout: str, stderr: str, elapsed: float, witness_dir: Path):
        self.stdout = stdout
        self.stderr = stderr
        self.elapsed = elapsed
        self.witness_dir = witness_dir
        # parse "d d d" sequence lines grouped by the trailing "n=.. solutions=.." line
        self.sequences = {}
        pending = []
        for line in stdout.splitlines():
            if line.startswith("n="):
                head, _, _ = line.partition(" ")
                n = int(head[2:])
                self.sequences[n] = pending
                pending = []
            else:
                pending.append(tuple(int(tok) for tok in line.split()))

    def catalog(self, n: int) -> set:
        return set(self.sequences[n])


@pytest.fixture(scope="session")
def golden_run(tmp_path_factory) -> GoldenRun:
    import io

    wdir = tmp_path_factory.mktemp("witnesses")
    out, err = io.StringIO(), io.StringIO()
    t0 = time.perf_counter()
    code = cli.main(["table", "8", "16", "--witness-dir", str(wdir)], out=out, err=err)
    elapsed = time.perf_counter() - t0
    assert code == cli.EXIT_OK, err.getvalue()
    return GoldenRun(out.getvalue(), err.getvalue(), elapsed, wdir)
