import io
import json
from pathlib import Path

import pytest

from diamondfree import Design, Graph, verify_witness
from diamondfree import cli

GOLDEN = Path(__file__).resolve().parent.parent / "goldens" / "solution_table_8_16.txt"


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def golden_slice(n_lo, n_hi):
    # golden lines for a sub-range of n, delimited by the "n=.. solutions=.." rows
    lines = GOLDEN.read_text().splitlines(keepends=True)
    keep, current = [], []
    for line in lines:
        current.append(line)
        if line.startswith("n="):
            n = int(line.split()[0][2:])
            if n_lo <= n <= n_hi:
                keep.extend(current)
            current = []
    return "".join(keep)


def test_table_matches_golden_slice():
    code, out, err = run_cli(["table", "8", "12"])
    assert code == cli.EXIT_OK
    assert out == golden_slice(8, 12)
    assert "time=" in err and "time=" not in out


def test_solve_single_n():
    code, out, _ = run_cli(["solve", "8"])
    assert code == cli.EXIT_OK
    assert out == "3 3 3 3 3 3 3 3\nn=8 solutions=1\n"


def test_jobs_do_not_change_bytes():
    _, solo, _ = run_cli(["table", "8", "12"])
    _, fanned, _ = run_cli(["table", "8", "12", "--jobs", "2"])
    assert fanned == solo


def test_csv_and_json_formats():
    code, out, _ = run_cli(["solve", "10", "--format", "csv"])
    assert code == cli.EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "n,sequence,time_s_nongolden"
    assert len(lines) == 2 and lines[1].startswith("10,")

    code, out, _ = run_cli(["solve", "10", "--format", "json"])
    doc = json.loads(out)
    assert doc["runs"][0]["n"] == 10 and doc["runs"][0]["solutions"] == 1
    assert doc["runs"][0]["sequences"] == [[6, 6, 3, 3, 3, 3, 3, 3, 3, 3]]


def test_witness_dir_and_verify_roundtrip(tmp_path):
    wdir = tmp_path / "w"
    code, _, _ = run_cli(["solve", "9", "--witness-dir", str(wdir)])
    assert code == cli.EXIT_OK
    files = sorted(wdir.iterdir())
    assert [f.name for f in files] == ["n09_6-6-6-3-3-3-3-3-3.txt"]
    seq = tuple(int(t) for t in files[0].stem.split("_")[1].split("-"))
    assert verify_witness(files[0].read_text(), seq, 9).passed
    code, out, _ = run_cli(["verify", str(files[0]), "--sequence", "6 6 6 3 3 3 3 3 3", "--n", "9"])
    assert code == cli.EXIT_OK and out.strip().endswith("PASS")


def test_verify_failure_and_bad_input(tmp_path):
    bad = tmp_path / "k4.txt"
    bad.write_text(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).to_text())
    code, out, _ = run_cli(["verify", str(bad), "--sequence", "3 3 3 3", "--n", "4"])
    assert code == cli.EXIT_FAIL
    assert "diamond_free_ok=false" in out and out.strip().endswith("FAIL")

    garbage = tmp_path / "garbage.txt"
    garbage.write_text("not a matrix\n")
    code, _, err = run_cli(["verify", str(garbage), "--sequence", "3 3 3 3", "--n", "4"])
    assert code == cli.EXIT_BAD_INPUT and "malformed" in err

    code, _, err = run_cli(["verify", str(tmp_path / "missing.txt"), "--sequence", "3", "--n", "1"])
    assert code == cli.EXIT_BAD_INPUT


def test_range_validation():
    code, _, err = run_cli(["table", "12", "8"])
    assert code == cli.EXIT_BAD_INPUT and "error:" in err
    code, _, _ = run_cli(["table", "2", "8"])
    assert code == cli.EXIT_BAD_INPUT
    code, _, _ = run_cli(["solve", "25"])  # above default max_n=20
    assert code == cli.EXIT_BAD_INPUT


def test_config_file(tmp_path):
    cfg = tmp_path / "limits.cfg"
    cfg.write_text("# solver limits\nmax_n = 9\n")
    code, _, _ = run_cli(["solve", "10", "--config", str(cfg)])
    assert code == cli.EXIT_BAD_INPUT  # config caps the range
    code, _, _ = run_cli(["solve", "9", "--config", str(cfg)])
    assert code == cli.EXIT_OK
    bad = tmp_path / "bad.cfg"
    bad.write_text("max_n = soon\n")
    code, _, err = run_cli(["solve", "8", "--config", str(bad)])
    assert code == cli.EXIT_BAD_INPUT and "integer" in err


def test_node_limit_inconclusive():
    code, _, err = run_cli(["solve", "12", "--node-limit", "5"])
    assert code == cli.EXIT_INCONCLUSIVE and "inconclusive" in err


def test_sts_command(tmp_path):
    out_file = tmp_path / "sts.json"
    code, out, _ = run_cli(["sts", "9", "--seed", "4", "--out", str(out_file)])
    assert code == cli.EXIT_OK
    assert out.strip().endswith("n=9 blocks=12")
    design = Design.from_json(out_file.read_text())
    assert design.n == 9 and design.covers_all_pairs()
    # deterministic bytes for a fixed seed
    again = run_cli(["sts", "9", "--seed", "4"])
    assert again[1] == out
    code, _, _ = run_cli(["sts", "8"])
    assert code == cli.EXIT_BAD_INPUT


def test_design4_command(tmp_path):
    code, out, _ = run_cli(["design4", "13", "--seed", "0"])
    assert code == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["s4"] == 10 and doc["is_complete_design"] is False
    assert doc["complement_diamond_free"] is True

    # all attempts capped: partial state is discarded and the exit says so
    code, out, err = run_cli(["design4", "16", "--seed", "11", "--max-iterations", "500"])
    assert code == cli.EXIT_INCONCLUSIVE and out == ""
    assert "500" in err

    # a restart can rescue a capped seed
    code, out, _ = run_cli(["design4", "16", "--seed", "11", "--restarts", "1", "--max-iterations", "50000"])
    assert code == cli.EXIT_OK


def test_modela_command():
    code, out, _ = run_cli(["modela", "8", "--diff"])
    assert code == cli.EXIT_OK
    assert out == "3 3 3 3 3 3 3 3\nn=8 solutions=1\nmodels agree\n"
    code, _, _ = run_cli(["modela", "14"])  # above default max_n=12
    assert code == cli.EXIT_BAD_INPUT


def test_bench_command():
    code, out, _ = run_cli(["bench", "8", "9"])
    assert code == cli.EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0].startswith("n=8 graphical=") and "nodes=" in lines[0]
    assert lines[-1].startswith("total time=")


def test_unknown_command_exits_via_argparse():
    with pytest.raises(SystemExit) as exc:
        run_cli(["frobnicate"])
    assert exc.value.code == 2
