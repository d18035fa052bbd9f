"""Subcommand behavior, exit codes, and output discipline."""

import io
from contextlib import redirect_stderr, redirect_stdout

import pytest

from sudorect import SudokuGrid, figure1_fixture, is_m_rectangle, parse, render, validate
from sudorect.cli import main


def run_cli(*argv):
    out = io.StringIO()
    err = io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def figure1_file(tmp_path):
    path = tmp_path / "figure1.txt"
    path.write_text(render(figure1_fixture()))
    return str(path)


@pytest.fixture
def empty4_file(tmp_path):
    path = tmp_path / "empty4.txt"
    path.write_text(render(SudokuGrid(2)))
    return str(path)


# -- check ----------------------------------------------------------------------


def test_check_figure1(figure1_file):
    code, out, err = run_cli("check", figure1_file)
    assert code == 0
    assert "valid" in out
    assert "5×9" in out and "k=3" in out and "l=1" in out and "r=2" in out


def test_check_corrupted_row(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("k=2\n1 1 . .\n. . . .\n. . . .\n. . . .\n")
    code, out, err = run_cli("check", str(path))
    assert code == 1
    assert "row condition" in out


def test_check_missing_file():
    code, out, err = run_cli("check", "/nonexistent/grid.txt")
    assert code == 2
    assert "parse error" in err


def test_check_malformed_file(tmp_path):
    path = tmp_path / "short.txt"
    path.write_text("k=2\n1 2 3\n")
    code, out, err = run_cli("check", str(path))
    assert code == 2


def test_check_kv_format(figure1_file):
    code, out, err = run_cli("check", figure1_file, "--format", "kv")
    assert code == 0
    assert out.strip() == "valid=true k=3 m=5 l=1 r=2"


# -- decide ---------------------------------------------------------------------


def test_decide_k3_m5():
    code, out, err = run_cli("decide", "--k", "3", "--m", "5")
    assert code == 1
    assert "not guaranteed" in out


def test_decide_k3_m6():
    code, out, err = run_cli("decide", "--k", "3", "--m", "6")
    assert code == 0
    assert "guaranteed" in out and "r=0" in out


def test_decide_k4_m7():
    code, out, err = run_cli("decide", "--k", "4", "--m", "7")
    assert code == 1


def test_decide_kv():
    code, out, err = run_cli("decide", "--k", "3", "--m", "7", "--format", "kv")
    assert code == 0
    assert out.strip() == "k=3 m=7 guaranteed=true reason=l=k-1"


def test_decide_bad_integer():
    code, out, err = run_cli("decide", "--k", "x", "--m", "1")
    assert code == 2


def test_decide_out_of_range():
    code, out, err = run_cli("decide", "--k", "3", "--m", "11")
    assert code == 2


# -- complete ---------------------------------------------------------------------


def test_complete_figure1_rejects(figure1_file):
    code, out, err = run_cli("complete", figure1_file)
    assert code == 1
    assert out == ""  # payload channel stays clean
    assert "not completable" in err
    assert "block (2,1)" in err


def test_complete_empty4(empty4_file):
    code, out, err = run_cli("complete", empty4_file)
    assert code == 0
    grid = parse(out)
    assert grid.is_full() and validate(grid) is None


def test_complete_prefix_extends_it(tmp_path, figure1):
    from sudorect import truncate_rows

    prefix = truncate_rows(figure1, 3)
    path = tmp_path / "r3prefix.txt"
    path.write_text(render(prefix))
    code, out, err = run_cli("complete", str(path))
    assert code == 0
    grid = parse(out)
    assert grid.is_full()
    for r in range(1, 4):
        for c in range(1, 10):
            assert grid.get(r, c) == prefix.get(r, c)


def test_complete_deterministic_and_seeded(empty4_file):
    code_a, out_a, _ = run_cli("complete", empty4_file)
    code_b, out_b, _ = run_cli("complete", empty4_file)
    assert (code_a, out_a) == (code_b, out_b)
    code_s1, out_s1, _ = run_cli("complete", empty4_file, "--seed", "5")
    code_s2, out_s2, _ = run_cli("complete", empty4_file, "--seed", "5")
    assert (code_s1, out_s1) == (code_s2, out_s2)
    assert code_s1 == 0
    grid = parse(out_s1)
    assert validate(grid) is None and grid.is_full()


def test_complete_rejects_non_rectangle(tmp_path):
    path = tmp_path / "ragged.txt"
    path.write_text("k=2\n. . . .\n1 . . .\n. . . .\n. . . .\n")
    code, out, err = run_cli("complete", str(path))
    assert code == 2


# -- construct ---------------------------------------------------------------------


def test_construct_k3_m5_roundtrip(tmp_path):
    target = tmp_path / "cex.txt"
    code, out, err = run_cli("construct", "--k", "3", "--m", "5", "-o", str(target))
    assert code == 0
    text = target.read_text()
    assert text.startswith("#")
    grid = parse(text)
    assert validate(grid) is None
    code2, out2, err2 = run_cli("check", str(target))
    assert code2 == 0
    code3, out3, err3 = run_cli("complete", str(target))
    assert code3 == 1


def test_construct_guaranteed_shape_fails(tmp_path):
    code, out, err = run_cli("construct", "--k", "3", "--m", "6")
    assert code == 2
    assert "completable" in err


def test_construct_k4_m10_stdout():
    code, out, err = run_cli("construct", "--k", "4", "--m", "10")
    assert code == 0
    grid = parse(out)
    shape = is_m_rectangle(grid)
    assert shape is not None and shape.m == 10
    assert "case: b" in out


# -- count ------------------------------------------------------------------------


def test_count_empty4(empty4_file):
    code, out, err = run_cli("count", empty4_file)
    assert code == 0
    assert out.strip() == "288"


def test_count_figure1_zero_is_success(figure1_file):
    code, out, err = run_cli("count", figure1_file)
    assert code == 0
    assert out.strip() == "0"


def test_count_capped_exits_negative(empty4_file):
    code, out, err = run_cli("count", empty4_file, "--max-nodes", "10")
    assert code == 1
    assert "partial" in err


def test_count_kv(empty4_file):
    code, out, err = run_cli("count", empty4_file, "--format", "kv")
    assert code == 0
    assert out.strip() == "count=288 exhausted=true nodes=2272"


# -- bounds -----------------------------------------------------------------------


def test_bounds_table():
    code, out, err = run_cli("bounds", "--k-max", "6")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 6  # header + k = 2..6
    assert lines[0].split() == ["k", "n", "ratio_lower", "ratio_upper"]


def test_bounds_kv_rows_parse():
    code, out, err = run_cli("bounds", "--k-max", "5", "--format", "kv")
    assert code == 0
    rows = [line.split() for line in out.strip().splitlines()]
    assert [int(r[0]) for r in rows] == [2, 3, 4, 5]
    for r in rows:
        assert int(r[1]) == int(r[0]) ** 2
        lo, up = float(r[4]), float(r[5])
        assert lo <= up


def test_bounds_rejects_bad_k_max():
    code, out, err = run_cli("bounds", "--k-max", "1")
    assert code == 2


# -- usage ------------------------------------------------------------------------


def test_missing_subcommand_is_usage_error():
    code, out, err = run_cli()
    assert code == 2


def test_unknown_subcommand_is_usage_error():
    code, out, err = run_cli("frobnicate")
    assert code == 2
