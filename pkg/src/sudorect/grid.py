"""Partial Sudoku squares of order n = k².

A grid cell holds either a value in [1, n] or the empty marker ``None``.
Grids are plain mutable containers: placing a conflicting value is allowed
and later reported by :func:`validate`, so files with broken content can be
loaded and diagnosed instead of rejected at parse time.  Occupancy is
tracked incrementally (value -> multiplicity per row/column/block) so that
candidate checks during search are O(1); :meth:`SudokuGrid.audit` rescans
from the cells and detects drift.

All public row/column indices are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence


class GridError(Exception):
    """Bad use of the grid API (out-of-range index, occupied cell, ...)."""


class ParseError(GridError):
    """Grid text that does not match the file format."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", token {column}" if column is not None else "") + ")"
        super().__init__(message + where)


class CellRef(NamedTuple):
    row: int
    col: int


class BlockIndex(NamedTuple):
    block_row: int
    block_col: int


class Order:
    """Grid geometry for side n = k² with k×k blocks."""

    __slots__ = ("k", "n")

    def __init__(self, k: int):
        if not isinstance(k, int) or k < 1:
            raise GridError(f"block side must be a positive integer, got {k!r}")
        self.k = k
        self.n = k * k

    def block_of(self, row: int, col: int) -> BlockIndex:
        k = self.k
        return BlockIndex((row - 1) // k + 1, (col - 1) // k + 1)

    def block_cells(self, block: BlockIndex) -> Iterator[CellRef]:
        k = self.k
        r0 = (block.block_row - 1) * k
        c0 = (block.block_col - 1) * k
        for dr in range(1, k + 1):
            for dc in range(1, k + 1):
                yield CellRef(r0 + dr, c0 + dc)

    def __eq__(self, other) -> bool:
        return isinstance(other, Order) and other.k == self.k

    def __hash__(self) -> int:
        return hash(("Order", self.k))

    def __repr__(self) -> str:
        return f"Order(k={self.k})"


@dataclass(frozen=True)
class RectShape:
    """Decomposition m = l·k + r of a rectangle's filled row count."""

    m: int
    l: int
    r: int

    @classmethod
    def of(cls, m: int, k: int) -> "RectShape":
        l, r = divmod(m, k)
        return cls(m=m, l=l, r=r)


@dataclass(frozen=True)
class Violation:
    """One witnessing pair of conflicting cells (or a malformed entry).

    ``kind`` is one of ``"row"``, ``"column"``, ``"block"``, ``"malformed"``.
    For ``"malformed"`` both cells name the offending entry.
    """

    kind: str
    first: CellRef
    second: CellRef

    def describe(self) -> str:
        if self.kind == "malformed":
            return f"malformed entry at ({self.first.row},{self.first.col})"
        return (
            f"{self.kind} condition violated by cells "
            f"({self.first.row},{self.first.col}) and ({self.second.row},{self.second.col})"
        )


class SudokuGrid:
    """An n×n partial Sudoku square with incremental occupancy tracking."""

    __slots__ = ("order", "_cells", "_row_occ", "_col_occ", "_block_occ", "_filled")

    def __init__(self, order: Order | int):
        self.order = order if isinstance(order, Order) else Order(order)
        n = self.order.n
        self._cells: list[list[Optional[int]]] = [[None] * n for _ in range(n)]
        self._row_occ: list[dict[int, int]] = [dict() for _ in range(n)]
        self._col_occ: list[dict[int, int]] = [dict() for _ in range(n)]
        self._block_occ: list[dict[int, int]] = [dict() for _ in range(n)]
        self._filled = 0

    # -- geometry helpers

    def _check_index(self, row: int, col: int) -> None:
        n = self.order.n
        if not (1 <= row <= n and 1 <= col <= n):
            raise GridError(f"cell ({row},{col}) outside 1..{n}")

    def _block_id(self, row: int, col: int) -> int:
        k = self.order.k
        return ((row - 1) // k) * k + (col - 1) // k

    # -- cell access

    def get(self, row: int, col: int) -> Optional[int]:
        self._check_index(row, col)
        return self._cells[row - 1][col - 1]

    def set(self, row: int, col: int, value: int) -> None:
        """Place ``value``; the cell must currently be empty.

        Conflicting placements are stored, not rejected: validity is a
        property checked by :func:`validate`, not an insertion constraint.
        """
        self._check_index(row, col)
        n = self.order.n
        if not isinstance(value, int) or not (1 <= value <= n):
            raise GridError(f"value {value!r} outside 1..{n}")
        if self._cells[row - 1][col - 1] is not None:
            raise GridError(f"cell ({row},{col}) already filled; clear it first")
        self._cells[row - 1][col - 1] = value
        for occ, idx in (
            (self._row_occ, row - 1),
            (self._col_occ, col - 1),
            (self._block_occ, self._block_id(row, col)),
        ):
            occ[idx][value] = occ[idx].get(value, 0) + 1
        self._filled += 1

    def clear(self, row: int, col: int) -> None:
        self._check_index(row, col)
        value = self._cells[row - 1][col - 1]
        if value is None:
            return
        self._cells[row - 1][col - 1] = None
        for occ, idx in (
            (self._row_occ, row - 1),
            (self._col_occ, col - 1),
            (self._block_occ, self._block_id(row, col)),
        ):
            bag = occ[idx]
            if bag[value] == 1:
                del bag[value]
            else:
                bag[value] -= 1
        self._filled -= 1

    def can_place(self, row: int, col: int, value: int) -> bool:
        """True iff placing ``value`` at the empty cell keeps all conditions."""
        self._check_index(row, col)
        if self._cells[row - 1][col - 1] is not None:
            return False
        return (
            value not in self._row_occ[row - 1]
            and value not in self._col_occ[col - 1]
            and value not in self._block_occ[self._block_id(row, col)]
        )

    def candidates(self, row: int, col: int) -> list[int]:
        self._check_index(row, col)
        row_occ = self._row_occ[row - 1]
        col_occ = self._col_occ[col - 1]
        blk_occ = self._block_occ[self._block_id(row, col)]
        return [
            v
            for v in range(1, self.order.n + 1)
            if v not in row_occ and v not in col_occ and v not in blk_occ
        ]

    # -- queries used by the completion pipeline

    def row_values(self, row: int) -> set[int]:
        return set(self._row_occ[row - 1])

    def column_values(self, col: int) -> set[int]:
        return set(self._col_occ[col - 1])

    def block_values(self, block: BlockIndex) -> set[int]:
        k = self.order.k
        return set(self._block_occ[(block.block_row - 1) * k + (block.block_col - 1)])

    def in_column(self, col: int, value: int) -> bool:
        return value in self._col_occ[col - 1]

    def in_row(self, row: int, value: int) -> bool:
        return value in self._row_occ[row - 1]

    @property
    def filled_count(self) -> int:
        return self._filled

    def is_full(self) -> bool:
        return self._filled == self.order.n * self.order.n

    def empty_cells(self) -> Iterator[CellRef]:
        n = self.order.n
        for r in range(n):
            row = self._cells[r]
            for c in range(n):
                if row[c] is None:
                    yield CellRef(r + 1, c + 1)

    def rows(self) -> list[tuple[Optional[int], ...]]:
        return [tuple(row) for row in self._cells]

    # -- value semantics

    def copy(self) -> "SudokuGrid":
        dup = SudokuGrid.__new__(SudokuGrid)
        dup.order = self.order
        dup._cells = [row[:] for row in self._cells]
        dup._row_occ = [dict(d) for d in self._row_occ]
        dup._col_occ = [dict(d) for d in self._col_occ]
        dup._block_occ = [dict(d) for d in self._block_occ]
        dup._filled = self._filled
        return dup

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SudokuGrid)
            and other.order == self.order
            and other._cells == self._cells
        )

    __hash__ = None  # mutable container

    def __repr__(self) -> str:
        return f"SudokuGrid(k={self.order.k}, filled={self._filled})"

    # -- consistency

    def audit(self) -> bool:
        """Recompute occupancy from the cells; True iff nothing drifted."""
        fresh = SudokuGrid(self.order)
        for r, row in enumerate(self._cells):
            for c, v in enumerate(row):
                if v is None:
                    continue
                fresh._cells[r][c] = v
                for occ, idx in (
                    (fresh._row_occ, r),
                    (fresh._col_occ, c),
                    (fresh._block_occ, self._block_id(r + 1, c + 1)),
                ):
                    occ[idx][v] = occ[idx].get(v, 0) + 1
                fresh._filled += 1
        return (
            fresh._row_occ == self._row_occ
            and fresh._col_occ == self._col_occ
            and fresh._block_occ == self._block_occ
            and fresh._filled == self._filled
        )

    @classmethod
    def from_rows(cls, k: int, rows: Sequence[Sequence[Optional[int]]]) -> "SudokuGrid":
        """Build a grid from n rows of n entries (``None`` = empty)."""
        grid = cls(k)
        n = grid.order.n
        if len(rows) != n or any(len(row) != n for row in rows):
            raise GridError(f"expected {n}×{n} entries")
        for r, row in enumerate(rows, start=1):
            for c, v in enumerate(row, start=1):
                if v is not None:
                    grid.set(r, c, v)
        return grid


def validate(grid: SudokuGrid) -> Optional[Violation]:
    """Check the row, column and block conditions; None means valid.

    The scan is row-major and reports the first offending cell, paired with
    its earliest (row-major) conflicting partner.  When the pair sits in one
    block, the conflict is reported as a block violation even if the cells
    also share a column; a shared row wins over both.
    """
    order = grid.order
    n, k = order.n, order.k
    first_in_row: dict[tuple[int, int], CellRef] = {}
    first_in_col: dict[tuple[int, int], CellRef] = {}
    first_in_block: dict[tuple[int, int], CellRef] = {}
    cells = grid.rows()
    for r in range(1, n + 1):
        for c in range(1, n + 1):
            v = cells[r - 1][c - 1]
            if v is None:
                continue
            here = CellRef(r, c)
            if not isinstance(v, int) or not (1 <= v <= n):
                return Violation("malformed", here, here)
            b = ((r - 1) // k) * k + (c - 1) // k
            partners = [
                p
                for p in (
                    first_in_row.get((r, v)),
                    first_in_col.get((c, v)),
                    first_in_block.get((b, v)),
                )
                if p is not None
            ]
            if partners:
                partner = min(partners)
                if partner.row == r:
                    kind = "row"
                elif ((partner.row - 1) // k) * k + (partner.col - 1) // k == b:
                    kind = "block"
                else:
                    kind = "column"
                return Violation(kind, partner, here)
            first_in_row.setdefault((r, v), here)
            first_in_col.setdefault((c, v), here)
            first_in_block.setdefault((b, v), here)
    return None


def is_m_rectangle(grid: SudokuGrid) -> Optional[RectShape]:
    """Shape of the grid if its filled region is exactly the first m rows."""
    n, k = grid.order.n, grid.order.k
    cells = grid.rows()
    m = 0
    for r in range(n):
        filled = sum(1 for v in cells[r] if v is not None)
        if filled == n and m == r:
            m += 1
        elif filled != 0:
            return None
    return RectShape.of(m, k)


def is_pq_rectangle(grid: SudokuGrid) -> Optional[tuple[int, int]]:
    """(p, q) if exactly the top-left p×q region is filled; (0, 0) if empty."""
    n = grid.order.n
    cells = grid.rows()
    if grid.filled_count == 0:
        return (0, 0)
    p = 0
    q = None
    for r in range(n):
        filled_cols = [c for c, v in enumerate(cells[r]) if v is not None]
        if not filled_cols:
            if any(any(v is not None for v in cells[t]) for t in range(r + 1, n)):
                return None
            break
        width = len(filled_cols)
        if filled_cols != list(range(width)):
            return None
        if q is None:
            q = width
        elif width != q:
            return None
        if r != p:
            return None
        p += 1
    if q is None:
        return (0, 0)
    return (p, q)


def truncate_rows(grid: SudokuGrid, m: int) -> SudokuGrid:
    """Copy of the grid with rows m+1..n cleared."""
    n = grid.order.n
    if not (0 <= m <= n):
        raise GridError(f"row count {m} outside 0..{n}")
    out = grid.copy()
    for r in range(m + 1, n + 1):
        for c in range(1, n + 1):
            out.clear(r, c)
    return out


def parse(text: str) -> SudokuGrid:
    """Parse the grid text format.

    Line 1 is ``k=<int>``; then exactly n lines of n whitespace-separated
    tokens, each a decimal in [1, n] or "." ("0" also means empty).  Lines
    starting with ``#`` are comments; blank lines are skipped.
    """
    data_lines: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        data_lines.append((lineno, stripped))
    if not data_lines:
        raise ParseError("empty input, expected a k=<int> header")
    header_line, header = data_lines[0]
    if not header.startswith("k"):
        raise ParseError("first line must be k=<int>", header_line)
    body = header[1:].lstrip()
    if not body.startswith("="):
        raise ParseError("first line must be k=<int>", header_line)
    try:
        k = int(body[1:].strip())
    except ValueError:
        raise ParseError(f"bad block side {body[1:].strip()!r}", header_line) from None
    if k < 1:
        raise ParseError(f"block side must be >= 1, got {k}", header_line)
    n = k * k
    rows = data_lines[1:]
    if len(rows) != n:
        lineno = rows[-1][0] if rows else header_line
        raise ParseError(f"expected {n} rows for k={k}, got {len(rows)}", lineno)
    grid = SudokuGrid(k)
    for r, (lineno, line) in enumerate(rows, start=1):
        tokens = line.split()
        if len(tokens) != n:
            raise ParseError(f"expected {n} tokens, got {len(tokens)}", lineno)
        for c, token in enumerate(tokens, start=1):
            if token == "." or token == "0":
                continue
            try:
                value = int(token)
            except ValueError:
                raise ParseError(f"bad token {token!r}", lineno, c) from None
            if not (1 <= value <= n):
                raise ParseError(f"value {value} outside 1..{n}", lineno, c)
            grid.set(r, c, value)
    return grid


def render(grid: SudokuGrid) -> str:
    """Canonical text form: single spaces, "." for empty, k=<int> header."""
    lines = [f"k={grid.order.k}"]
    for row in grid.rows():
        lines.append(" ".join("." if v is None else str(v) for v in row))
    return "\n".join(lines) + "\n"
