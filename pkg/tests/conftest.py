"""Shared fixtures: the acceptance-line collector.

Lines appended through the acceptance_log fixture are replayed in a
terminal section after the run, where capture cannot swallow them.
"""

import pytest

_lines: list[str] = []


@pytest.fixture
def acceptance_log():
    return _lines


def pytest_terminal_summary(terminalreporter):
    if _lines:
        terminalreporter.section("acceptance criteria")
        for line in _lines:
            terminalreporter.write_line(line)
