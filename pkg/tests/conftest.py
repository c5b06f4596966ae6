import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from apollonius.bary_core import TriangleMetric  # noqa: E402

ACCEPTANCE_LINES: dict = {}


@pytest.fixture
def T():
    return TriangleMetric.from_sides(13, 14, 15)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
