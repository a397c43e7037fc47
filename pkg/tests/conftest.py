"""Shared pytest wiring.

The acceptance tests each report a one-line verdict. Output capture hides
stdout of passing tests under a plain `pytest -v`, so the lines are also
replayed in the terminal summary where they always show.
"""
import pytest

_criterion_lines = []


@pytest.fixture
def verdict():
    """Record and print a `criterion NN: pass|FAIL (detail)` line."""
    def _record(num: int, ok: bool, detail: str) -> bool:
        line = f"criterion {num:02d}: {'pass' if ok else 'FAIL'} ({detail})"
        print(line)
        _criterion_lines.append(line)
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if not _criterion_lines:
        return
    terminalreporter.section("acceptance criteria")
    # zero-padded numbers make lexicographic order the numeric one
    for line in sorted(set(_criterion_lines)):
        terminalreporter.write_line(line)
