import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "repro", derandomize=True, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile("repro")

GATE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if GATE_LINES:
        terminalreporter.section("acceptance gate")
        for line in GATE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def gate():
    def record(label: str, ok: bool, seconds: float, note: str = "") -> None:
        status = "PASS" if ok else "FAIL"
        GATE_LINES.append(f"{status}  {label}  ({seconds:.2f}s){'  ' + note if note else ''}")
    return record
