"""Command-line interface.

Commands: solve, table, verify, sts, design4, modela, bench.

Output discipline: everything that should be byte-identical across runs
goes to stdout; measured times go to stderr in text mode, or into a
column/field explicitly named *_nongolden in csv/json mode.  Exit
codes: 0 success, 1 verification or diff failure, 2 bad input,
3 inconclusive search.  Configuration comes from flags and an optional
key=value file; environment variables are never consulted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from .designs import RngSpec, stinson_four, stinson_sts
from .errors import Inconclusive
from .graphs import DegreeSequence
from .modela import solve_model_a
from .pipeline import solve_sequences
from .verify import WitnessFormatError, verify_witness

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_BAD_INPUT = 2
EXIT_INCONCLUSIVE = 3

_CONFIG_KEYS = {"node_limit": int, "max_n": int, "max_iterations": int}


class _CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _CliError(f"cannot read config file: {exc}", EXIT_BAD_INPUT) from None
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in _CONFIG_KEYS:
            raise _CliError(f"config line {lineno}: bad entry {raw!r}", EXIT_BAD_INPUT)
        try:
            out[key] = _CONFIG_KEYS[key](value.strip())
        except ValueError:
            raise _CliError(
                f"config line {lineno}: {key} needs an integer, got {value.strip()!r}",
                EXIT_BAD_INPUT,
            ) from None
    return out


def _setting(args, config: dict, key: str, default):
    flag = getattr(args, key, None)
    if flag is not None:
        return flag
    return config.get(key, default)


def _run_range(args, n_min: int, n_max: int, default_max_n: int = 20):
    config = _load_config(args.config)
    max_n = _setting(args, config, "max_n", default_max_n)
    node_limit = _setting(args, config, "node_limit", None)
    if not 4 <= n_min <= n_max <= max_n:
        raise _CliError(
            f"need 4 <= n_min <= n_max <= {max_n}, got {n_min}..{n_max}", EXIT_BAD_INPUT
        )
    runs = []
    for n in range(n_min, n_max + 1):
        t0 = time.perf_counter()
        results = solve_sequences(n, node_limit=node_limit, jobs=args.jobs)
        elapsed = time.perf_counter() - t0
        runs.append((n, [r for r in results if r.realizable], elapsed))
        if args.witness_dir:
            wdir = Path(args.witness_dir)
            wdir.mkdir(parents=True, exist_ok=True)
            for r in results:
                if r.graph is not None:
                    name = f"n{n:02d}_" + "-".join(str(d) for d in r.sequence) + ".txt"
                    (wdir / name).write_text(r.graph.to_text())
    return runs


def _emit_runs(runs, fmt: str, out, err) -> None:
    if fmt == "text":
        for n, solved, elapsed in runs:
            for r in solved:
                print(r.sequence.text(), file=out)
            print(f"n={n} solutions={len(solved)}", file=out)
            print(f"n={n} time={elapsed:.3f}s", file=err)
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n", "sequence", "time_s_nongolden"])
        for n, solved, elapsed in runs:
            for r in solved:
                writer.writerow([n, r.sequence.text(), f"{elapsed:.3f}"])
        out.write(buf.getvalue())
    else:  # json
        doc = {
            "runs": [
                {
                    "n": n,
                    "solutions": len(solved),
                    "sequences": [list(r.sequence) for r in solved],
                    "time_s_nongolden": round(elapsed, 3),
                }
                for n, solved, elapsed in runs
            ]
        }
        print(json.dumps(doc), file=out)


def _cmd_solve(args, out, err) -> int:
    runs = _run_range(args, args.n, args.n)
    _emit_runs(runs, args.format, out, err)
    return EXIT_OK


def _cmd_table(args, out, err) -> int:
    runs = _run_range(args, args.n_min, args.n_max)
    _emit_runs(runs, args.format, out, err)
    return EXIT_OK


def _cmd_verify(args, out, err) -> int:
    try:
        serialized = Path(args.graph_file).read_text()
    except OSError as exc:
        raise _CliError(f"cannot read witness file: {exc}", EXIT_BAD_INPUT) from None
    try:
        seq = DegreeSequence.from_text(args.sequence)
    except ValueError as exc:
        raise _CliError(str(exc), EXIT_BAD_INPUT) from None
    report = verify_witness(serialized, seq, args.n)
    for field in ("simple_ok", "diamond_free_ok", "degrees_match_ok", "arithmetic_ok"):
        print(f"{field}={str(getattr(report, field)).lower()}", file=out)
    if report.failure_detail:
        print(f"detail: {report.failure_detail}", file=out)
    print("PASS" if report.passed else "FAIL", file=out)
    return EXIT_OK if report.passed else EXIT_FAIL


def _attempts(seed: int, restarts: int):
    for i in range(restarts + 1):
        yield RngSpec(seed + i)


def _cmd_sts(args, out, err) -> int:
    config = _load_config(args.config)
    max_iterations = _setting(args, config, "max_iterations", 10_000_000)
    if args.n < 1 or args.n % 6 not in (1, 3):
        raise _CliError(f"no triple system exists on {args.n} points", EXIT_BAD_INPUT)
    for spec in _attempts(args.seed, args.restarts):
        try:
            design = stinson_sts(args.n, spec, max_iterations=max_iterations)
        except Inconclusive:
            continue
        if args.out:
            Path(args.out).write_text(design.to_json())
        out.write(design.to_text())
        print(f"n={args.n} blocks={len(design.blocks)}", file=out)
        return EXIT_OK
    print(
        f"no triple system found within {max_iterations} iterations "
        f"x {args.restarts + 1} attempts",
        file=err,
    )
    return EXIT_INCONCLUSIVE


def _cmd_design4(args, out, err) -> int:
    config = _load_config(args.config)
    max_iterations = _setting(args, config, "max_iterations", 10_000_000)
    if args.n < 1:
        raise _CliError(f"point count must be positive, got {args.n}", EXIT_BAD_INPUT)
    for spec in _attempts(args.seed, args.restarts):
        try:
            design, report = stinson_four(args.n, spec, max_iterations=max_iterations)
        except Inconclusive:
            continue
        if args.out:
            Path(args.out).write_text(design.to_json())
        print(json.dumps(report.to_json_dict()), file=out)
        return EXIT_OK
    print(
        f"climb still moving after {max_iterations} iterations "
        f"x {args.restarts + 1} attempts",
        file=err,
    )
    return EXIT_INCONCLUSIVE


def _cmd_modela(args, out, err) -> int:
    config = _load_config(args.config)
    max_n = _setting(args, config, "max_n", 12)
    node_limit = _setting(args, config, "node_limit", None)
    if not 4 <= args.n <= max_n:
        raise _CliError(f"need 4 <= n <= {max_n}, got {args.n}", EXIT_BAD_INPUT)
    found = solve_model_a(args.n, node_limit=node_limit)
    for seq in found:
        print(seq.text(), file=out)
    print(f"n={args.n} solutions={len(found)}", file=out)
    if args.diff:
        staged = [
            r.sequence for r in solve_sequences(args.n, node_limit=node_limit) if r.realizable
        ]
        if [tuple(s) for s in found] != [tuple(s) for s in staged]:
            print(f"model mismatch at n={args.n}", file=err)
            return EXIT_FAIL
        print("models agree", file=out)
    return EXIT_OK


def _cmd_bench(args, out, err) -> int:
    config = _load_config(args.config)
    max_n = _setting(args, config, "max_n", 20)
    node_limit = _setting(args, config, "node_limit", None)
    if not 4 <= args.n_min <= args.n_max <= max_n:
        raise _CliError(
            f"need 4 <= n_min <= n_max <= {max_n}, got {args.n_min}..{args.n_max}",
            EXIT_BAD_INPUT,
        )
    total = 0.0
    for n in range(args.n_min, args.n_max + 1):
        t0 = time.perf_counter()
        results = solve_sequences(n, node_limit=node_limit, jobs=args.jobs)
        elapsed = time.perf_counter() - t0
        total += elapsed
        solved = sum(1 for r in results if r.realizable)
        nodes = sum(r.stats.nodes for r in results)
        print(
            f"n={n} graphical={len(results)} solutions={solved} "
            f"nodes={nodes} time={elapsed:.3f}s",
            file=out,
        )
    print(f"total time={total:.3f}s", file=out)
    return EXIT_OK


def _add_common_solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the search fan-out")
    p.add_argument("--node-limit", type=int, default=None, dest="node_limit",
                   help="abort any single search after this many nodes")
    p.add_argument("--config", default=None, help="key=value file for solver limits")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diamondfree",
        description="Degree sequences of diamond-free graphs, and design hill climbs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="find all realizable sequences for one n")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--witness-dir", default=None, dest="witness_dir")
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    _add_common_solver_flags(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("table", help="emit the n_min..n_max solution table")
    p.add_argument("n_min", type=int)
    p.add_argument("n_max", type=int)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--witness-dir", default=None, dest="witness_dir")
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    _add_common_solver_flags(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="independently check a witness graph file")
    p.add_argument("graph_file")
    p.add_argument("--sequence", required=True, help="claimed degrees, space-separated")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sts", help="hill-climb a Steiner triple system")
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=0)
    p.add_argument("--max-iterations", type=int, default=None, dest="max_iterations")
    p.add_argument("--out", default=None, help="write the design as JSON to this file")
    p.add_argument("--config", default=None)
    p.set_defaults(func=_cmd_sts)

    p = sub.add_parser("design4", help="hill-climb a block-size-4 structure")
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=0)
    p.add_argument("--max-iterations", type=int, default=None, dest="max_iterations")
    p.add_argument("--out", default=None, help="write the design as JSON to this file")
    p.add_argument("--config", default=None)
    p.set_defaults(func=_cmd_design4)

    p = sub.add_parser("modela", help="single-stage cross-check model")
    p.add_argument("n", type=int)
    p.add_argument("--diff", action="store_true", help="compare against the staged pipeline")
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    p.add_argument("--node-limit", type=int, default=None, dest="node_limit")
    p.add_argument("--config", default=None)
    p.set_defaults(func=_cmd_modela)

    p = sub.add_parser("bench", help="pipeline timing and node counts per n")
    p.add_argument("n_min", type=int)
    p.add_argument("n_max", type=int)
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    _add_common_solver_flags(p)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out, err)
    except _CliError as exc:
        print(f"error: {exc}", file=err)
        return exc.code
    except WitnessFormatError as exc:
        print(f"malformed input: {exc}", file=err)
        return EXIT_BAD_INPUT
    except Inconclusive as exc:
        print(f"inconclusive: {exc}", file=err)
        return EXIT_INCONCLUSIVE
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
