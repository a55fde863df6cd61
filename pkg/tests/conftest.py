import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_RESULTS = []


@pytest.fixture
def acceptance_log():
    def log(number, title, ok, detail):
        _RESULTS.append((number, title, ok, detail))
        print(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}")

    return log


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(_RESULTS):
        terminalreporter.write_line(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}")
