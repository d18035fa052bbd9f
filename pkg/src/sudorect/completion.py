"""Completion of m×n Sudoku rectangles by matching plus edge coloring.

A rectangle whose first m = l·k + r rows are filled is completed row block
by row block.  For the (possibly partial) row block l+1, each of its k
blocks gets a degree-constrained matching that assigns k−r fresh values to
every column of the block (stage 1); the union of the assignments over the
whole row block is a (k−r)-regular bipartite graph whose edge coloring
names the empty row for every value (stage 2).  Full row blocks below are
the same procedure with r = 0.  Infeasibility of a stage-1 matching in the
first, partial row block is the one and only source of "not completable",
and it comes with a deficient-column-set certificate that can be replayed
against the input grid.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Union

from .bipartite import (
    BipartiteGraph,
    DegreeDemand,
    HallCertificate,
    degree_matching,
    edge_color,
)
from .grid import (
    BlockIndex,
    RectShape,
    SudokuGrid,
    is_m_rectangle,
    is_pq_rectangle,
    validate,
)


class CompletionError(Exception):
    """Precondition violation or an internal pipeline inconsistency."""


@dataclass(frozen=True)
class Completability:
    """Whether every valid rectangle with m filled rows is completable."""

    k: int
    m: int
    guaranteed: bool
    reason: Optional[str]  # "r=0" | "l=k-1" | "product" | None


@dataclass(frozen=True)
class NotCompletable:
    """Rejection witness: a deficient column set in one block.

    ``columns`` are absolute 1-based column indices inside ``block``;
    ``candidates`` is every value those columns could still take, which is
    too few to give each column ``quota`` fresh values.
    """

    block: BlockIndex
    quota: int
    columns: tuple[int, ...]
    candidates: tuple[int, ...]


CompletionOutcome = Union[SudokuGrid, NotCompletable]


def decide_guaranteed(k: int, m: int) -> Completability:
    """Evaluate the three shape conditions on m = l·k + r."""
    if k < 1:
        raise CompletionError(f"block side must be >= 1, got {k}")
    if not (0 <= m <= k * k):
        raise CompletionError(f"row count {m} outside 0..{k * k}")
    l, r = divmod(m, k)
    if r == 0:
        return Completability(k, m, True, "r=0")
    if l == k - 1:
        return Completability(k, m, True, "l=k-1")
    if (k - r) * (k - l) >= l * k:
        return Completability(k, m, True, "product")
    return Completability(k, m, False, None)


def _stage1_graph(
    grid: SudokuGrid, shape: RectShape, block: BlockIndex
) -> tuple[list[int], list[int], BipartiteGraph]:
    """Columns-vs-values eligibility graph for one block of row block l+1.

    The values on offer are those absent from the block's filled rows; a
    value is eligible for a column iff it does not already appear in that
    column.  Left quota is k−r per column, right quota 1 per value.
    """
    k = grid.order.k
    n = grid.order.n
    cols = [(block.block_col - 1) * k + j for j in range(1, k + 1)]
    present = grid.block_values(block)
    values = [v for v in range(1, n + 1) if v not in present]
    edges = []
    for ci, col in enumerate(cols):
        for vi, v in enumerate(values):
            if not grid.in_column(col, v):
                edges.append((ci, vi))
    return cols, values, BipartiteGraph.build(len(cols), len(values), edges)


def complete_row_block_stage1(
    grid: SudokuGrid,
    shape: RectShape,
    block: BlockIndex,
    rng: random.Random | None = None,
) -> Union[dict[int, list[int]], NotCompletable]:
    """Assign k−r fresh values to every column of one block.

    Returns {absolute column -> sorted values} on success, or the
    deficient-set witness.  ``shape`` describes the filled rows of the
    row block being extended (r = 0 for a fully empty row block).
    """
    k = grid.order.k
    if block.block_row != shape.l + 1:
        raise CompletionError(
            f"block row {block.block_row} is not the open row block {shape.l + 1}"
        )
    cols, values, graph = _stage1_graph(grid, shape, block)
    if rng is not None:
        edges = list(graph.edges)
        rng.shuffle(edges)
        graph = BipartiteGraph.build(graph.left_count, graph.right_count, edges)
    demand = DegreeDemand.uniform(graph, k - shape.r, 1)
    result = degree_matching(graph, demand)
    if isinstance(result, HallCertificate):
        return NotCompletable(
            block=block,
            quota=k - shape.r,
            columns=tuple(cols[i] for i in result.left_set),
            candidates=tuple(sorted(values[i] for i in result.neighborhood)),
        )
    assigned: dict[int, list[int]] = {col: [] for col in cols}
    for e in result:
        ci, vi = graph.edges[e]
        assigned[cols[ci]].append(values[vi])
    for col in assigned:
        assigned[col].sort()
    return assigned


def complete_row_block_stage2(
    order_k: int,
    shape: RectShape,
    assignments: dict[int, list[int]],
    rng: random.Random | None = None,
) -> list[tuple[int, int, int]]:
    """Place every assigned value into a specific empty row of the row block.

    ``assignments`` must cover all n columns with exactly k−r values each
    and use every value exactly k−r times (a (k−r)-regular bipartite
    graph); its edge coloring with k−r colors names the rows.  Returns
    (row, column, value) placements for rows l·k+r+1 .. (l+1)·k.
    """
    k = order_k
    n = k * k
    quota = k - shape.r
    if sorted(assignments) != list(range(1, n + 1)):
        raise CompletionError("assignments must cover every column once")
    edges = []
    for col in range(1, n + 1):
        values = assignments[col]
        if len(values) != quota:
            raise CompletionError(
                f"column {col} got {len(values)} values, expected {quota}"
            )
        for v in values:
            edges.append((col - 1, v - 1))
    per_value = [0] * n
    for _, vi in edges:
        per_value[vi] += 1
    if any(count != quota for count in per_value):
        raise CompletionError("assignments are not value-regular; stage-1 bug")
    if rng is not None:
        rng.shuffle(edges)
    graph = BipartiteGraph.build(n, n, edges)
    colors = edge_color(graph)
    base_row = shape.l * k + shape.r
    placements = []
    for (ci, vi), color in zip(graph.edges, colors):
        placements.append((base_row + color, ci + 1, vi + 1))
    return placements


def _fill_row_block(
    work: SudokuGrid, shape: RectShape, rng: random.Random | None
) -> Optional[NotCompletable]:
    """Run both stages for the row block l+1 of ``work``; None on success."""
    k = work.order.k
    merged: dict[int, list[int]] = {}
    for d in range(1, k + 1):
        outcome = complete_row_block_stage1(
            work, shape, BlockIndex(shape.l + 1, d), rng
        )
        if isinstance(outcome, NotCompletable):
            return outcome
        merged.update(outcome)
    for row, col, value in complete_row_block_stage2(k, shape, merged, rng):
        if not work.can_place(row, col, value):
            raise CompletionError(f"stage 2 produced a conflict at ({row},{col})")
        work.set(row, col, value)
    return None


def _complete(grid: SudokuGrid, rng: random.Random | None) -> CompletionOutcome:
    violation = validate(grid)
    if violation is not None:
        raise CompletionError(f"input grid is invalid: {violation.describe()}")
    shape = is_m_rectangle(grid)
    if shape is None:
        raise CompletionError("input is not an m-rectangle (first m rows filled)")
    n, k = grid.order.n, grid.order.k
    if shape.m == n:
        return grid.copy()
    work = grid.copy()
    if shape.r > 0:
        failure = _fill_row_block(work, shape, rng)
        if failure is not None:
            return failure
    # every remaining row block is empty; feasibility is guaranteed there
    start = shape.l + (2 if shape.r > 0 else 1)
    for b in range(start, k + 1):
        failure = _fill_row_block(work, RectShape.of((b - 1) * k, k), rng)
        if failure is not None:
            raise CompletionError(
                f"full row block {b} unexpectedly infeasible; pipeline bug"
            )
    if not work.is_full() or validate(work) is not None:
        raise CompletionError("completed grid failed its own validity check")
    return work


def complete(grid: SudokuGrid) -> CompletionOutcome:
    """Complete the rectangle to a full square or reject it with a witness."""
    return _complete(grid, None)


def complete_randomized(grid: SudokuGrid, seed: int) -> CompletionOutcome:
    """Like :func:`complete` but shuffles edge lists; deterministic per seed."""
    return _complete(grid, random.Random(seed))


def verify_certificate(grid: SudokuGrid, witness: NotCompletable) -> bool:
    """Replay a rejection witness against the grid it was issued for.

    Recomputes, independently of the matching code, the set of values still
    placeable in the witnessed columns of the witnessed block, and checks
    that it is smaller than quota × |columns|.
    """
    k = grid.order.k
    n = grid.order.n
    block_cols = {
        (witness.block.block_col - 1) * k + j for j in range(1, k + 1)
    }
    if not witness.columns or not set(witness.columns) <= block_cols:
        return False
    present = grid.block_values(witness.block)
    reachable: set[int] = set()
    for col in witness.columns:
        for v in range(1, n + 1):
            if v not in present and not grid.in_column(col, v):
                reachable.add(v)
    return len(reachable) < witness.quota * len(witness.columns)


def extend_column_blocks(grid: SudokuGrid) -> SudokuGrid:
    """Extend a rectangle filled on m rows × k columns to full width m×n.

    The partial first column block is padded with k−r rows holding, in
    increasing order, the values missing from its bottom partial block, so
    every block of the scratch column is full (the padding may break column
    uniqueness, which is why this works on a raw matrix).  Each further
    column block is then produced by a k-to-1 row/value matching per row
    block followed by a k-color edge coloring that names the new column for
    every (row, value) pair.  The padding rows are dropped at the end.
    """
    violation = validate(grid)
    if violation is not None:
        raise CompletionError(f"input grid is invalid: {violation.describe()}")
    k = grid.order.k
    n = grid.order.n
    pq = is_pq_rectangle(grid)
    if pq is None or (pq[1] != k and pq != (0, 0)):
        raise CompletionError(f"input must fill exactly m rows × {k} columns")
    m = pq[0]
    if m == 0:
        return grid.copy()
    l, r = divmod(m, k)
    height = (l + 1) * k if r > 0 else m
    cells = grid.rows()
    matrix: list[list[int]] = [[cells[i][j] for j in range(k)] for i in range(m)]
    if r > 0:
        present = set()
        for i in range(l * k, m):
            present.update(matrix[i])
        missing = [v for v in range(1, n + 1) if v not in present]
        if len(missing) != n - r * k:
            raise CompletionError("partial block does not hold r·k distinct values")
        for chunk in range(k - r):
            matrix.append(missing[chunk * k : (chunk + 1) * k])
    row_sets = [set(row) for row in matrix]

    block_count = height // k
    for t in range(1, k):
        # stage 1: per row block, give each row k values it does not contain
        chosen: list[list[int]] = [[] for _ in range(height)]
        for b in range(block_count):
            rows = range(b * k, (b + 1) * k)
            edges = []
            for ri, row in enumerate(rows):
                for v in range(1, n + 1):
                    if v not in row_sets[row]:
                        edges.append((ri, v - 1))
            graph = BipartiteGraph.build(k, n, edges)
            result = degree_matching(graph, DegreeDemand.uniform(graph, k, 1))
            if isinstance(result, HallCertificate):
                raise CompletionError(
                    f"column block {t + 1}, row block {b + 1}: matching infeasible; bug"
                )
            for e in result:
                ri, vi = graph.edges[e]
                chosen[b * k + ri].append(vi + 1)
        # stage 2: color (row, value) pairs with k colors = the k new columns
        edges = []
        for row in range(height):
            chosen[row].sort()
            for v in chosen[row]:
                edges.append((row, v - 1))
        graph = BipartiteGraph.build(height, n, edges)
        colors = edge_color(graph)
        for row in range(height):
            matrix[row].extend([0] * k)
        for (row, vi), color in zip(graph.edges, colors):
            matrix[row][t * k + color - 1] = vi + 1
            row_sets[row].add(vi + 1)
        if any(0 in row[t * k :] for row in matrix):
            raise CompletionError(f"column block {t + 1} left a hole; coloring bug")

    out = SudokuGrid(k)
    for i in range(m):
        for j in range(n):
            out.set(i + 1, j + 1, matrix[i][j])
    violation = validate(out)
    if violation is not None:
        raise CompletionError(f"extension failed validity: {violation.describe()}")
    return out
