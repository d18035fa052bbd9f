"""Command-line front end.

Subcommands: check, decide, complete, construct, count, bounds.  Exit
codes: 0 success/affirmative, 1 well-formed negative (violation found, not
completable, not guaranteed, capped count), 2 usage or input errors.  All
diagnostics go to stderr; stdout carries only grid/table payloads, so the
commands compose in pipes.  ``--format kv`` switches the reports to
machine-readable key=value lines.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .completion import (
    CompletionError,
    NotCompletable,
    complete,
    complete_randomized,
    decide_guaranteed,
)
from .constructions import ConstructionError, construct_counterexample
from .counting import (
    CountingError,
    asymptotic_table,
    count_completions,
    sudoku_bounds,
)
from .grid import GridError, ParseError, SudokuGrid, is_m_rectangle, parse, render, validate

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def _read_grid(path: str) -> SudokuGrid:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return parse(text)


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _warn(text: str) -> None:
    sys.stderr.write(text + "\n")


def _cmd_check(args) -> int:
    grid = _read_grid(args.file)
    violation = validate(grid)
    if args.format == "kv":
        if violation is None:
            shape = is_m_rectangle(grid)
            extra = (
                f" m={shape.m} l={shape.l} r={shape.r}" if shape is not None else ""
            )
            _emit(f"valid=true k={grid.order.k}{extra}")
            return EXIT_OK
        _emit(
            "valid=false kind={} first={},{} second={},{}".format(
                violation.kind,
                violation.first.row,
                violation.first.col,
                violation.second.row,
                violation.second.col,
            )
        )
        return EXIT_NEGATIVE
    if violation is None:
        shape = is_m_rectangle(grid)
        if shape is not None:
            _emit(
                f"valid ({shape.m}×{grid.order.n} rectangle, "
                f"k={grid.order.k}, l={shape.l}, r={shape.r})"
            )
        else:
            _emit(
                f"valid (k={grid.order.k}, {grid.filled_count}/{grid.order.n ** 2} filled)"
            )
        return EXIT_OK
    _emit(violation.describe())
    return EXIT_NEGATIVE


def _cmd_decide(args) -> int:
    verdict = decide_guaranteed(args.k, args.m)
    if args.format == "kv":
        _emit(
            f"k={verdict.k} m={verdict.m} guaranteed={str(verdict.guaranteed).lower()}"
            f" reason={verdict.reason or 'none'}"
        )
    elif verdict.guaranteed:
        _emit(
            f"guaranteed: every valid {verdict.m}×{verdict.k ** 2} rectangle "
            f"completes ({verdict.reason})"
        )
    else:
        _emit(
            f"not guaranteed: some valid {verdict.m}×{verdict.k ** 2} rectangles "
            f"have no completion"
        )
    return EXIT_OK if verdict.guaranteed else EXIT_NEGATIVE


def _cmd_complete(args) -> int:
    grid = _read_grid(args.file)
    if args.seed is not None:
        outcome = complete_randomized(grid, args.seed)
    else:
        outcome = complete(grid)
    if isinstance(outcome, NotCompletable):
        values = ",".join(map(str, outcome.candidates)) or "none"
        _warn(
            "not completable: block ({},{}) columns {} admit only values {} "
            "(need {} each)".format(
                outcome.block.block_row,
                outcome.block.block_col,
                ",".join(map(str, outcome.columns)),
                values,
                outcome.quota,
            )
        )
        return EXIT_NEGATIVE
    _emit(render(outcome))
    return EXIT_OK


def _cmd_construct(args) -> int:
    try:
        report = construct_counterexample(args.k, args.m)
    except ConstructionError as exc:
        _warn(str(exc))
        return EXIT_ERROR
    shape = is_m_rectangle(report.rectangle)
    header = [
        f"# non-completable {shape.m}×{report.rectangle.order.n} rectangle",
        f"# case: {report.case_used}  k={args.k} m={args.m} l={shape.l} r={shape.r}",
    ]
    if report.special_elements is not None:
        x, x1, x2 = report.special_elements
        header.append(f"# special elements: x={x} x1={x1} x2={x2}")
    payload = "\n".join(header) + "\n" + render(report.rectangle)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(payload)
    else:
        _emit(payload)
    return EXIT_OK


def _cmd_count(args) -> int:
    grid = _read_grid(args.file)
    result = count_completions(
        grid, max_nodes=args.max_nodes, max_solutions=args.max_solutions
    )
    if args.format == "kv":
        _emit(
            f"count={result.count} exhausted={str(result.exhausted).lower()}"
            f" nodes={result.nodes_visited}"
        )
    else:
        _emit(str(result.count))
    if result.exhausted:
        return EXIT_OK
    _warn(f"search capped after {result.nodes_visited} nodes; count is partial")
    return EXIT_NEGATIVE


def _cmd_bounds(args) -> int:
    rows = asymptotic_table(args.k_max)
    if args.format == "kv":
        for k, _, _ in rows:
            report = sudoku_bounds(k)
            _emit(
                f"{report.k} {report.n} {report.log_lower:.6f} {report.log_upper:.6f}"
                f" {report.ratio_lower:.6f} {report.ratio_upper:.6f}"
            )
        return EXIT_OK
    _emit(f"{'k':>5} {'n':>8} {'ratio_lower':>12} {'ratio_upper':>12}")
    for k, lo, up in rows:
        _emit(f"{k:>5} {k * k:>8} {lo:>12.6f} {up:>12.6f}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sudorect",
        description="Sudoku rectangle completion, constructions and counting bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a grid file")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "kv"), default="text")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("decide", help="is every m-row rectangle completable?")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=("text", "kv"), default="text")
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("complete", help="complete a rectangle or reject it")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=None,
                   help="shuffle candidate orders (deterministic per seed)")
    p.set_defaults(func=_cmd_complete)

    p = sub.add_parser("construct", help="emit a non-completable rectangle")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("count", help="count completions by backtracking")
    p.add_argument("file")
    p.add_argument("--max-nodes", type=int, default=None)
    p.add_argument("--max-solutions", type=int, default=None)
    p.add_argument("--format", choices=("text", "kv"), default="text")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("bounds", help="counting-bound ratio table")
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--format", choices=("text", "kv"), default="text")
    p.set_defaults(func=_cmd_bounds)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        _warn(f"parse error: {exc}")
        return EXIT_ERROR
    except (GridError, CompletionError, ConstructionError, CountingError) as exc:
        _warn(str(exc))
        return EXIT_ERROR
    except ValueError as exc:
        _warn(str(exc))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
