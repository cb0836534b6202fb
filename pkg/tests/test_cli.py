"""Command-line client: subcommands, exit codes, stream discipline."""
from __future__ import annotations

import pytest

from cubeplan import Configuration
from cubeplan.cli import (EXIT_FAILED, EXIT_INFEASIBLE, EXIT_OK, EXIT_PARSE, main)
from cubeplan.fileio import format_cfg, load_cfg, load_trace, save_cfg


@pytest.fixture
def l_tromino_file(tmp_path):
    p = tmp_path / "l.cfg"
    save_cfg(p, Configuration.of(2, [(0, 0), (1, 0), (0, 1)]))
    return str(p)


@pytest.fixture
def straight_file(tmp_path):
    p = tmp_path / "straight.cfg"
    save_cfg(p, Configuration.of(2, [(0, 0), (1, 0), (2, 0)]))
    return str(p)


def test_gen_writes_connected_cfg(tmp_path):
    out = tmp_path / "g.cfg"
    assert main(["gen", "--n", "12", "--d", "2", "--seed", "4", "--out", str(out)]) == EXIT_OK
    V = load_cfg(out)
    assert V.n == 12 and V.d == 2


def test_gen_to_stdout(capsys):
    assert main(["gen", "--n", "3", "--d", "2", "--seed", "0",
                 "--style", "serpentine", "--out", "-"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("2 3\n")


def test_canonicalize_emits_trace(tmp_path, l_tromino_file, capsys):
    out = tmp_path / "c.trace"
    assert main(["canonicalize", "--in", l_tromino_file, "--out", str(out)]) == EXIT_OK
    d, moves = load_trace(out)
    assert d == 2 and len(moves) >= 1
    assert "moves" in capsys.readouterr().err


def test_plan_then_validate_expect(tmp_path, l_tromino_file, straight_file):
    trace = tmp_path / "p.trace"
    assert main(["plan", "--from", l_tromino_file, "--to", straight_file,
                 "--out", str(trace)]) == EXIT_OK
    assert main(["validate", "--config", l_tromino_file, "--trace", str(trace),
                 "--expect", straight_file]) == EXIT_OK


def test_validate_prints_final_cfg(tmp_path, l_tromino_file, straight_file, capsys):
    trace = tmp_path / "p.trace"
    main(["plan", "--from", l_tromino_file, "--to", straight_file, "--out", str(trace)])
    capsys.readouterr()
    assert main(["validate", "--config", l_tromino_file, "--trace", str(trace)]) == EXIT_OK
    out = capsys.readouterr().out
    assert out == format_cfg(Configuration.of(2, [(0, 0), (1, 0), (2, 0)]))


def test_validate_corrupted_trace_exits_1(tmp_path, l_tromino_file, straight_file, capsys):
    trace = tmp_path / "p.trace"
    main(["plan", "--from", l_tromino_file, "--to", straight_file, "--out", str(trace)])
    lines = trace.read_text().splitlines()
    lines[2] = lines[1]  # repeat the first move: its source cell is now empty
    trace.write_text("\n".join(lines) + "\n")
    assert main(["validate", "--config", l_tromino_file,
                 "--trace", str(trace)]) == EXIT_FAILED
    assert "invalid at move" in capsys.readouterr().err


def test_validate_expect_mismatch_exits_1(tmp_path, l_tromino_file, straight_file):
    empty = tmp_path / "id.trace"
    empty.write_text("2 0\n")
    assert main(["validate", "--config", l_tromino_file, "--trace", str(empty),
                 "--expect", straight_file]) == EXIT_FAILED


def test_plan_mismatched_sizes_exits_3(tmp_path, l_tromino_file):
    small = tmp_path / "small.cfg"
    save_cfg(small, Configuration.of(2, [(0, 0)]))
    assert main(["plan", "--from", l_tromino_file, "--to", str(small),
                 "--out", "-"]) == EXIT_INFEASIBLE


def test_missing_file_exits_2(tmp_path):
    assert main(["canonicalize", "--in", str(tmp_path / "nope.cfg"),
                 "--out", "-"]) == EXIT_PARSE


def test_malformed_cfg_exits_2(tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("2 2\n0 0\n0 0\n")
    assert main(["canonicalize", "--in", str(bad), "--out", "-"]) == EXIT_PARSE


def test_analyze_report(tmp_path, capsys):
    ring = tmp_path / "ring.cfg"
    save_cfg(ring, Configuration.of(2, [(x, y) for x in range(3) for y in range(3)
                                        if x in (0, 2) or y in (0, 2)]))
    assert main(["analyze", "--in", str(ring)]) == EXIT_OK
    out = capsys.readouterr().out.splitlines()
    assert out == ["n 8", "d 2", "b_out 8", "holes 1",
                   "articulation -", "nonarticulate 8"]


def test_analyze_lists_articulation_cells(tmp_path, capsys):
    chain = tmp_path / "chain.cfg"
    save_cfg(chain, Configuration.of(2, [(0, 0), (1, 0), (2, 0)]))
    main(["analyze", "--in", str(chain)])
    out = capsys.readouterr().out.splitlines()
    assert "articulation 1,0" in out


def test_oracle_output(l_tromino_file, straight_file, capsys):
    assert main(["oracle", "--from", l_tromino_file, "--to", straight_file]) == EXIT_OK
    out = dict(line.split(" ", 1) for line in capsys.readouterr().out.splitlines())
    assert out["reachable"] == "true"
    assert int(out["min_moves"]) >= 1
    assert out["exhausted"] == "false"


def test_stats_csv_on_stdout(capsys):
    assert main(["stats", "--d", "2", "--n", "4,6", "--trials", "1",
                 "--seed", "3"]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "n,trial,moves,elapsed_ms"
    assert len(lines) == 3
