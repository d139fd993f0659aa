import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_REPORT: dict[int, str] = {}


@pytest.fixture
def report():
    """``report(n, ok, detail)`` records one acceptance line."""
    def record(n: int, ok: bool, detail: str = ""):
        line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}"
        _REPORT[n] = line + (f"  {detail}" if detail else "")
        print(_REPORT[n])
    return record


def pytest_terminal_summary(terminalreporter):
    if not _REPORT:
        return
    terminalreporter.section("acceptance")
    for n in sorted(_REPORT):
        terminalreporter.write_line(_REPORT[n])
