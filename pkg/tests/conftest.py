import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from higgs_ip.polyring import Polynomial  # noqa: E402


def P(*coeffs):
    return Polynomial(coeffs)


@pytest.fixture
def poly():
    return P


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
