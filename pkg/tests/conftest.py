import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from sudorect import SudokuGrid, complete_randomized, figure1_fixture


@pytest.fixture
def figure1() -> SudokuGrid:
    return figure1_fixture()


@pytest.fixture(scope="session")
def squares_k3() -> list[SudokuGrid]:
    """A pool of distinct completed 9×9 squares for truncation tests."""
    squares = []
    for seed in range(20):
        out = complete_randomized(SudokuGrid(3), seed)
        assert isinstance(out, SudokuGrid)
        squares.append(out)
    return squares


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion."""
    lines = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance" not in nodeid:
                continue
            name = nodeid.split("::")[-1]
            verdict = "PASS" if outcome == "passed" else "FAIL"
            lines.append((name, verdict))
    if not lines:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, verdict in sorted(lines):
        terminalreporter.write_line(f"{verdict}  {name}")
