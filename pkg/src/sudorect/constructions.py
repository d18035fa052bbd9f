"""Construction of non-completable Sudoku rectangles.

For every (k, m) that the shape predicate marks non-guaranteed, a single
k-column rectangle is built whose bottom partial block jams the first few
columns: the values their remaining cells could take are fewer than the
cells demand.  The column block is then widened to the full m×n rectangle
(which preserves non-completability, since the obstruction lives entirely
in the first column block).

There are three structural recipes, selected by the shape:

* case "a" (l < k/2): two stacked building-block rectangles over disjoint
  value halves, with the trailing rows of the right part recycled into
  fresh rows for the left part;
* case "b" (l >= k/2, k even): a 2×2 stack of four building blocks over
  the low/high value halves, followed by two in-block swaps and two
  overwrites that concentrate the high values in the bottom block;
* case "c" (l >= k/2, k odd): same idea with unbalanced halves; the right
  top block borrows a scratch alphabet that is substituted away before
  assembly.

Every recipe ends with a validity check and a completion run that must
reject; a construction that fails either check raises instead of
returning.  All placements are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .completion import (
    NotCompletable,
    complete,
    decide_guaranteed,
    extend_column_blocks,
    verify_certificate,
)
from .grid import SudokuGrid, validate


class ConstructionError(Exception):
    """Precondition failure or an internal integrity check that fired."""


@dataclass(frozen=True)
class CounterexampleReport:
    """A verified non-completable m×n rectangle."""

    rectangle: SudokuGrid
    case_used: str  # "a" | "b" | "c"
    special_elements: Optional[tuple[int, int, int]]  # (x, x1, x2) for b/c
    witness: NotCompletable


def canonical_partition(k: int, count: int, start: int = 1) -> list[list[int]]:
    """``count`` consecutive runs of k values beginning at ``start``."""
    return [list(range(start + i * k, start + (i + 1) * k)) for i in range(count)]


def construct_lemma2(
    a: int, b: int, k: int, parts: Sequence[Sequence[int]] | None = None
) -> SudokuGrid:
    """Rectangle on a·k rows × b columns from an ordered value partition.

    Column j+1 of block row i+1 holds part (i+j) mod c in increasing order,
    where c = max(a, b).  The columns of one block row then carry pairwise
    disjoint parts (block and row conditions), and so do the block rows of
    one column (column condition).
    """
    if k < 2:
        raise ConstructionError("constructions need k >= 2")
    if not (1 <= a <= k and 1 <= b <= k):
        raise ConstructionError(f"need 1 <= a,b <= {k}, got a={a}, b={b}")
    c = max(a, b)
    if parts is None:
        parts = canonical_partition(k, c)
    parts = [sorted(p) for p in parts]
    if len(parts) != c:
        raise ConstructionError(f"expected {c} parts, got {len(parts)}")
    seen: set[int] = set()
    n = k * k
    for part in parts:
        if len(part) != k or len(set(part)) != k:
            raise ConstructionError("every part must hold k distinct values")
        if seen & set(part):
            raise ConstructionError("parts must be pairwise disjoint")
        if any(not (1 <= v <= n) for v in part):
            raise ConstructionError(f"part values must lie in 1..{n}")
        seen |= set(part)
    matrix = _lemma2_matrix(a, b, k, parts)
    grid = SudokuGrid(k)
    for i, row in enumerate(matrix, start=1):
        for j, v in enumerate(row, start=1):
            grid.set(i, j, v)
    violation = validate(grid)
    if violation is not None:
        raise ConstructionError(f"building block invalid: {violation.describe()}")
    return grid


def _lemma2_matrix(
    a: int, b: int, k: int, parts: Sequence[Sequence[int]]
) -> list[list[int]]:
    """Raw a·k × b matrix of the rotation pattern (parts already ordered)."""
    c = max(a, b)
    rows = [[0] * b for _ in range(a * k)]
    for i in range(a):
        for j in range(b):
            part = parts[(i + j) % c]
            for t in range(k):
                rows[i * k + t][j] = part[t]
    return rows


def figure1_fixture() -> SudokuGrid:
    """The classic 5×9 rectangle with no valid completion."""
    rows = [
        [1, 2, 3, 4, 5, 6, 7, 8, 9],
        [4, 5, 6, 7, 8, 9, 1, 2, 3],
        [7, 8, 9, 1, 2, 3, 4, 5, 6],
        [8, 3, 2, 5, 6, 1, 9, 4, 7],
        [9, 6, 5, 8, 4, 7, 2, 3, 1],
    ]
    grid = SudokuGrid(3)
    for r, row in enumerate(rows, start=1):
        for c, v in enumerate(row, start=1):
            grid.set(r, c, v)
    return grid


# -- matrix helpers (constructions work on raw m×k column blocks) -----------


def _column(matrix: list[list[int]], col: int) -> list[int]:
    return [row[col - 1] for row in matrix]


def _stack(top: list[list[int]], bottom: list[list[int]]) -> list[list[int]]:
    return [row[:] for row in top] + [row[:] for row in bottom]


def _beside(left: list[list[int]], right: list[list[int]]) -> list[list[int]]:
    if len(left) != len(right):
        raise ConstructionError("side-by-side pieces must have equal heights")
    return [lr + rr for lr, rr in zip(left, right)]


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ConstructionError("construction integrity check failed: " + message)


def _swap_cells(matrix, r1, c1, r2, c2):
    matrix[r1 - 1][c1 - 1], matrix[r2 - 1][c2 - 1] = (
        matrix[r2 - 1][c2 - 1],
        matrix[r1 - 1][c1 - 1],
    )


def _matrix_to_grid(matrix: list[list[int]], k: int) -> SudokuGrid:
    grid = SudokuGrid(k)
    for r, row in enumerate(matrix, start=1):
        for c, v in enumerate(row, start=1):
            grid.set(r, c, v)
    violation = validate(grid)
    if violation is not None:
        raise ConstructionError(f"column block invalid: {violation.describe()}")
    return grid


# -- case a: l < k/2 ---------------------------------------------------------


def _case_a_matrix(k: int, l: int, r: int) -> list[list[int]]:
    m = l * k + r
    low = canonical_partition(k, l)  # values 1..lk
    high = canonical_partition(k, k - l, start=l * k + 1)  # values lk+1..k²
    left = _lemma2_matrix(l, l, k, low)  # lk rows × l cols
    right_full = _lemma2_matrix(l + 1, k - l, k, high)  # (l+1)k rows × k−l cols
    right = [row[:] for row in right_full[:m]]
    removed = right_full[m:]
    spare = sorted({v for row in removed for v in row})
    _require(len(spare) == (k - r) * (k - l), "recycled value pool has wrong size")

    needed = l * r
    pool = list(spare)
    if l + r > k:
        transfer_count = k * (l + r - k)
        _require(
            (k - l) * r > transfer_count,
            "kept partial rows cannot spare enough values",
        )
        transfer: list[tuple[int, int, int]] = []  # (row, col, value), 1-based
        for i in range(l * k, m):
            for j in range(k - l):
                if len(transfer) == transfer_count:
                    break
                transfer.append((i + 1, j + 1, right[i][j]))
            if len(transfer) == transfer_count:
                break
        _require(len(transfer) == transfer_count, "could not pick transfer values")
        pool.extend(v for _, _, v in transfer)
        # backfill the vacated cells from the low alphabet
        low_values = list(range(1, l * k + 1))
        used_backfill: set[int] = set()
        for row_idx, col_idx, _ in transfer:
            choice = None
            for v in low_values:
                if v in used_backfill:
                    continue  # one use keeps the partial block conflict-free
                if v in right[row_idx - 1]:
                    continue
                if v in _column(right, col_idx):
                    continue
                choice = v
                break
            _require(choice is not None, "no backfill value available")
            right[row_idx - 1][col_idx - 1] = choice
            used_backfill.add(choice)
    _require(len(pool) >= needed, "not enough recycled values for the new rows")

    # append r rows to the left part, greedily avoiding conflicts
    fresh_rows = [[0] * l for _ in range(r)]
    used: set[int] = set()
    for j in range(l):
        for i in range(r):
            choice = None
            for v in pool:
                if v in used or v in fresh_rows[i]:
                    continue
                if any(fresh_rows[t][j] == v for t in range(r)):
                    continue
                choice = v
                break
            if choice is None:
                choice = _case_a_fill_by_matching(pool, used, fresh_rows, i, j)
            _require(choice is not None, "cannot place a recycled value")
            fresh_rows[i][j] = choice
            used.add(choice)
    left_tall = left + fresh_rows
    return _beside(left_tall, right)


def _case_a_fill_by_matching(pool, used, fresh_rows, i, j) -> Optional[int]:
    """Fallback for the greedy fill; the pool values are mutually fresh, so
    any unused value without a same-row/column duplicate works."""
    for v in pool:
        if v not in used and v not in fresh_rows[i] and all(
            row[j] != v for row in fresh_rows
        ):
            return v
    return None


# -- case b: l >= k/2, k even ------------------------------------------------


def _case_b_matrix(k: int, l: int, r: int) -> tuple[list[list[int]], tuple[int, int, int]]:
    if k == 4:
        return _case_b_matrix_k4(l, r)
    c = k // 2
    m = l * k + r
    low = canonical_partition(k, c)  # F parts over 1..k²/2
    high = canonical_partition(k, c, start=c * k + 1)  # G parts
    perm3 = [high[1]] + [high[i] for i in range(3, c)] + [high[2], high[0]]
    perm4 = list(reversed(low))
    a_bottom = l + 1 - c
    top = _beside(_lemma2_matrix(c, c, k, low), _lemma2_matrix(c, c, k, high))
    bottom = _beside(
        _lemma2_matrix(a_bottom, c, k, perm3), _lemma2_matrix(a_bottom, c, k, perm4)
    )
    matrix = _stack(top, bottom)[:m]

    x = low[0][-1]
    x1 = high[0][-1]
    x2 = high[2][-1]
    _require(matrix[k - 1][0] == x, "x not at the foot of column 1")
    _require(matrix[2 * k - 1][c - 1] == x, "x not at the foot of column k/2")
    _require(matrix[k - 1][c] == x1, "x1 not at the foot of column k/2+1")
    _require(matrix[2 * k - 1][c + 1] == x2, "x2 not at the foot of column k/2+2")
    _require(x not in _column(matrix, c + 1), "x already in column k/2+1")
    _require(x not in _column(matrix, c + 2), "x already in column k/2+2")
    _require(x1 not in _column(matrix, 1), "x1 already in column 1")
    _require(x2 not in _column(matrix, c), "x2 already in column k/2")
    last_block = [v for row in matrix[l * k :] for v in row]
    _require(x1 not in last_block, "x1 sits in the bottom block")
    _require(x2 not in last_block, "x2 sits in the bottom block")

    _swap_cells(matrix, k, 1, k, c + 1)
    _swap_cells(matrix, 2 * k, c, 2 * k, c + 2)
    _require(x1 not in _column(matrix, c + 1), "x1 still in column k/2+1")
    _require(x2 not in _column(matrix, c + 2), "x2 still in column k/2+2")
    _require(x1 not in matrix[l * k], "x1 already in the overwrite row")
    _require(x2 not in matrix[l * k], "x2 already in the overwrite row")
    matrix[l * k][c] = x1
    matrix[l * k][c + 1] = x2
    return matrix, (x, x1, x2)


def _case_b_matrix_k4(l: int, r: int) -> tuple[list[list[int]], tuple[int, int, int]]:
    """k = 4 needs its own layout: the high half has only two parts, so the
    stated swap targets collapse onto one value.  Reordering a few columns
    frees two distinct high values (12 and 9) for the bottom block."""
    _require(l == 2, f"k=4 jammed shapes all have l=2, got l={l}")
    columns = [
        [1, 2, 3, 4, 5, 6, 7, 8, 10, 13, 14, 12],
        [5, 6, 7, 8, 1, 2, 3, 4, 11, 15, 16, 9],
        [9, 10, 11, 12, 13, 14, 15, 16, 5, 6, 7, 8],
        [13, 14, 15, 16, 10, 11, 12, 9, 1, 2, 3, 4],
    ]
    m = 8 + r
    matrix = [[columns[j][i] for j in range(4)] for i in range(m)]
    x, x1, x2 = 4, 12, 9
    _require(matrix[3][0] == x and matrix[7][1] == x, "x anchors moved")
    _require(matrix[3][2] == x1 and matrix[7][3] == x2, "swap targets moved")
    _swap_cells(matrix, 4, 1, 4, 3)
    _swap_cells(matrix, 8, 2, 8, 4)
    for col, value in ((3, x1), (4, x2)):
        _require(value not in _column(matrix, col), f"{value} still in column {col}")
        _require(value not in matrix[8], "overwrite row already holds the value")
        matrix[8][col - 1] = value
    return matrix, (x, x1, x2)


# -- case c: l >= k/2, k odd -------------------------------------------------


def _case_c_matrix(k: int, l: int, r: int) -> tuple[list[list[int]], tuple[int, int, int]]:
    c = (k + 1) // 2  # ceil(k/2)
    m = l * k + r
    low = canonical_partition(k, c)  # F parts over 1..kc
    high = canonical_partition(k, c - 1, start=c * k + 1)  # G parts
    scratch = list(range(k * k + 1, k * k + k + 1))  # substituted away below

    left_top = _lemma2_matrix(c, c - 1, k, low)
    right_top = _lemma2_matrix(c, c, k, [scratch] + high)
    # replace the scratch part: block row 1 gets part c-1, block row i gets i-2
    for i in range(1, c + 1):
        repl = sorted(low[c - 1] if i == 1 else low[i - 2])
        rows = range((i - 1) * k, i * k)
        cells = [
            (row, col)
            for row in rows
            for col in range(c)
            if right_top[row][col] > k * k
        ]
        _require(len(cells) == k, "scratch part must fill one column per block")
        for (row, col), v in zip(sorted(cells), repl):
            right_top[row][col] = v

    a3 = l + 1 - c
    left_bottom = _lemma2_matrix(a3, c - 1, k, list(reversed(high)))
    right_bottom = _lemma2_matrix(l + 2 - c, c, k, list(reversed(low)))[k:]
    matrix = _stack(
        _beside(left_top, right_top), _beside(left_bottom, right_bottom)
    )[:m]

    x = low[1][-1]
    x1 = high[c - 2][-1]
    x2 = high[0][-1]
    _require(matrix[k - 1][1] == x, "x not at the foot of column 2")
    _require(matrix[2 * k - 1][0] == x, "x not at the foot of column 1")
    _require(matrix[k - 1][k - 1] == x1, "x1 not at the foot of the last column")
    _require(matrix[2 * k - 1][c - 1] == x2, "x2 not at the foot of column ceil(k/2)")
    _require(x not in _column(matrix, k), "x already in the last column")
    _require(x not in _column(matrix, c), "x already in column ceil(k/2)")
    _require(x1 not in _column(matrix, 2), "x1 already in column 2")
    _require(x2 not in _column(matrix, 1), "x2 already in column 1")
    last_block = [v for row in matrix[l * k :] for v in row]
    _require(x1 not in last_block, "x1 sits in the bottom block")
    _require(x2 not in last_block, "x2 sits in the bottom block")

    _swap_cells(matrix, k, 2, k, k)
    _swap_cells(matrix, 2 * k, 1, 2 * k, c)
    _require(x1 not in _column(matrix, k), "x1 still in the last column")
    _require(x2 not in _column(matrix, c), "x2 still in column ceil(k/2)")
    _require(x1 not in matrix[l * k], "x1 already in the overwrite row")
    _require(x2 not in matrix[l * k], "x2 already in the overwrite row")
    matrix[l * k][k - 1] = x1
    matrix[l * k][c - 1] = x2
    return matrix, (x, x1, x2)


# -- the public construction -------------------------------------------------


def construct_counterexample(k: int, m: int) -> CounterexampleReport:
    """Build and verify a non-completable m×n rectangle.

    Raises if (k, m) is guaranteed-completable.  The returned rectangle is
    full-width (m×n): the jammed k-column block is widened first, and both
    the validity check and the completion rejection are re-verified here.
    """
    if k < 2:
        raise ConstructionError("constructions need k >= 2")
    verdict = decide_guaranteed(k, m)
    if verdict.guaranteed:
        raise ConstructionError(
            f"every valid rectangle with k={k}, m={m} is completable ({verdict.reason})"
        )
    l, r = divmod(m, k)
    special: Optional[tuple[int, int, int]] = None
    if 2 * l < k:
        case_used = "a"
        matrix = _case_a_matrix(k, l, r)
    elif k % 2 == 0:
        case_used = "b"
        matrix, special = _case_b_matrix(k, l, r)
    else:
        case_used = "c"
        matrix, special = _case_c_matrix(k, l, r)

    column_block = _matrix_to_grid(matrix, k)
    rectangle = extend_column_blocks(column_block)
    violation = validate(rectangle)
    _require(violation is None, f"extended rectangle invalid: {violation}")
    outcome = complete(rectangle)
    _require(
        isinstance(outcome, NotCompletable),
        "constructed rectangle is unexpectedly completable",
    )
    assert isinstance(outcome, NotCompletable)
    _require(
        verify_certificate(rectangle, outcome),
        "rejection witness does not replay",
    )
    return CounterexampleReport(
        rectangle=rectangle,
        case_used=case_used,
        special_elements=special,
        witness=outcome,
    )
