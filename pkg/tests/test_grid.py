"""Grid model, validation, shapes, and the text format."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sudorect import (
    CellRef,
    GridError,
    ParseError,
    RectShape,
    SudokuGrid,
    complete,
    complete_randomized,
    construct_lemma2,
    is_m_rectangle,
    is_pq_rectangle,
    parse,
    render,
    truncate_rows,
    validate,
)


def test_figure1_is_valid(figure1):
    assert validate(figure1) is None


def test_empty_grid_is_valid():
    assert validate(SudokuGrid(3)) is None


def test_block_conflict_reported_with_earliest_partner(figure1):
    # overwrite (5,9): 1 -> 7.  A direct scan of the figure shows 7 at (4,9)
    # (same column and block) and at (5,6) (same row); the earliest partner
    # in row-major order is (4,9), and a shared block outranks the shared
    # column in the report.
    broken = figure1.copy()
    broken.clear(5, 9)
    broken.set(5, 9, 7)
    violation = validate(broken)
    assert violation is not None
    assert violation.kind == "block"
    assert violation.first == CellRef(4, 9)
    assert violation.second == CellRef(5, 9)


def test_row_conflict():
    g = SudokuGrid(2)
    g.set(1, 1, 3)
    g.set(1, 4, 3)
    violation = validate(g)
    assert violation.kind == "row"
    assert (violation.first, violation.second) == (CellRef(1, 1), CellRef(1, 4))


def test_column_conflict_outside_block():
    g = SudokuGrid(2)
    g.set(1, 1, 3)
    g.set(3, 1, 3)
    violation = validate(g)
    assert violation.kind == "column"


def test_malformed_entry_detected_by_validate():
    g = SudokuGrid(2)
    g._cells[0][0] = 99  # simulate drift past the API
    violation = validate(g)
    assert violation.kind == "malformed"
    assert violation.first == CellRef(1, 1)
    assert not g.audit()


def test_validate_is_pure(figure1):
    first = validate(figure1)
    second = validate(figure1)
    assert first is None and second is None


def test_set_rejects_bad_values_and_occupied_cells():
    g = SudokuGrid(2)
    with pytest.raises(GridError):
        g.set(1, 1, 5)
    with pytest.raises(GridError):
        g.set(0, 1, 1)
    g.set(1, 1, 1)
    with pytest.raises(GridError):
        g.set(1, 1, 2)


# -- shapes ------------------------------------------------------------------


def test_m_rectangle_of_figure1(figure1):
    assert is_m_rectangle(figure1) == RectShape(m=5, l=1, r=2)


def test_m_rectangle_of_empty_grid():
    assert is_m_rectangle(SudokuGrid(3)) == RectShape(m=0, l=0, r=0)


def test_m_rectangle_of_full_square():
    square = complete(SudokuGrid(2))
    assert is_m_rectangle(square) == RectShape(m=4, l=2, r=0)


def test_m_rectangle_rejects_other_patterns():
    g = SudokuGrid(2)
    g.set(2, 1, 1)
    assert is_m_rectangle(g) is None


def test_pq_rectangle_of_lemma2_output():
    grid = construct_lemma2(a=1, b=2, k=3, parts=[[1, 2, 3], [4, 5, 6]])
    assert is_pq_rectangle(grid) == (3, 2)


def test_pq_rectangle_of_figure1(figure1):
    assert is_pq_rectangle(figure1) == (5, 9)


def test_pq_rectangle_single_cell_and_empty():
    g = SudokuGrid(3)
    g.set(1, 1, 1)
    assert is_pq_rectangle(g) == (1, 1)
    assert is_pq_rectangle(SudokuGrid(3)) == (0, 0)


def test_pq_rectangle_rejects_ragged_fill():
    g = SudokuGrid(2)
    g.set(1, 1, 1)
    g.set(2, 2, 1)
    assert is_pq_rectangle(g) is None


# -- truncation --------------------------------------------------------------


def test_truncate_full_square_is_identity():
    square = complete(SudokuGrid(2))
    assert truncate_rows(square, 4) == square


def test_truncate_to_zero_clears_everything(figure1):
    assert truncate_rows(figure1, 0) == SudokuGrid(3)


def test_truncate_recovers_figure1_prefix(figure1):
    prefix = truncate_rows(figure1, 3)
    square = complete(prefix)
    assert isinstance(square, SudokuGrid)
    six = truncate_rows(square, 6)
    assert truncate_rows(six, 3) == prefix


def test_truncate_range_check(figure1):
    with pytest.raises(GridError):
        truncate_rows(figure1, 10)


@pytest.mark.parametrize("m", range(0, 10))
def test_truncate_preserves_validity(figure1, m):
    assert validate(truncate_rows(figure1, m)) is None


# -- text format --------------------------------------------------------------


def test_parse_order4_rectangle():
    text = "k=2\n1 2 3 4\n3 4 1 2\n. . . .\n. . . .\n"
    grid = parse(text)
    assert grid.order.k == 2
    assert is_m_rectangle(grid) == RectShape(m=2, l=1, r=0)
    assert grid.get(1, 1) == 1 and grid.get(2, 4) == 2 and grid.get(3, 1) is None


def test_render_empty_order9():
    text = render(SudokuGrid(3))
    lines = text.splitlines()
    assert lines[0] == "k=3"
    assert len(lines) == 10
    assert all(line == " ".join(["."] * 9) for line in lines[1:])


def test_parse_render_figure1_roundtrip(figure1):
    assert parse(render(figure1)) == figure1


def test_parse_accepts_zero_and_comments():
    text = "# header comment\nk=2\n1 0 . 4\n# mid comment\n. . . .\n. . . .\n0 0 0 0\n"
    grid = parse(text)
    assert grid.get(1, 1) == 1
    assert grid.get(1, 2) is None
    assert grid.filled_count == 2


def test_parse_accepts_conflicting_content():
    # duplicates are a validity matter, not a parse error
    grid = parse("k=2\n1 1 . .\n. . . .\n. . . .\n. . . .\n")
    assert validate(grid).kind == "row"


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "empty input"),
        ("n=2\n", "k=<int>"),
        ("k=x\n", "bad block side"),
        ("k=2\n1 2 3\n3 4 1 2\n. . . .\n. . . .\n", "expected 4 tokens"),
        ("k=2\n1 2 3 4\n3 4 1 2\n. . . .\n", "expected 4 rows"),
        ("k=2\n1 2 3 9\n3 4 1 2\n. . . .\n. . . .\n", "outside 1..4"),
        ("k=2\n1 2 3 z\n3 4 1 2\n. . . .\n. . . .\n", "bad token"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert fragment in str(exc.value)


def test_parse_error_carries_line_number():
    with pytest.raises(ParseError) as exc:
        parse("k=2\n1 2 3 4\n3 4 1 z\n. . . .\n. . . .\n")
    assert exc.value.line == 3
    assert exc.value.column == 4


# -- properties ---------------------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10_000), keep=st.floats(0.0, 1.0))
def test_roundtrip_random_partial_grids(seed, keep):
    rng = random.Random(seed)
    square = complete_randomized(SudokuGrid(2), seed)
    grid = SudokuGrid(2)
    for r in range(1, 5):
        for c in range(1, 5):
            if rng.random() < keep:
                grid.set(r, c, square.get(r, c))
    assert parse(render(grid)) == grid


@settings(max_examples=40, deadline=None)
@given(ops=st.lists(st.tuples(st.integers(1, 4), st.integers(1, 4), st.integers(1, 4)), max_size=40))
def test_audit_matches_incremental_occupancy(ops):
    g = SudokuGrid(2)
    for row, col, value in ops:
        if g.get(row, col) is None:
            g.set(row, col, value)
        else:
            g.clear(row, col)
        assert g.audit()


def test_completed_square_value_counts(squares_k3):
    square = squares_k3[0]
    assert square.is_full() and validate(square) is None
    counts = {v: 0 for v in range(1, 10)}
    for row in square.rows():
        for v in row:
            counts[v] += 1
    assert all(c == 9 for c in counts.values())
    for unit in range(1, 10):
        assert square.row_values(unit) == set(range(1, 10))
        assert square.column_values(unit) == set(range(1, 10))
