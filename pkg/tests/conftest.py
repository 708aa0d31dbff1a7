"""Shared fixtures: the expensive certifications run once per session.

Acceptance tests record one line per criterion through the `acceptance`
fixture; the terminal summary reprints all of them so a plain `pytest -v`
shows the PASS/FAIL roster.
"""

import sys
import time
from dataclasses import dataclass
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hyperdet import Format, certify
from hyperdet.pipeline import CertificationResult


@dataclass(frozen=True)
class Timed:
    result: CertificationResult
    seconds: float


def _timed_certify(fmt, degree):
    t0 = time.perf_counter()
    result = certify(fmt, degree)
    return Timed(result, time.perf_counter() - t0)


@pytest.fixture(scope="session")
def cert_d6():
    return _timed_certify(Format(3, 3, 2), 6)


@pytest.fixture(scope="session")
def cert_d12():
    return _timed_certify(Format(3, 3, 2), 12)


@pytest.fixture(scope="session")
def cert_442_d8():
    return _timed_certify(Format(4, 4, 2), 8)


@pytest.fixture(scope="session")
def cert_222_d4():
    return _timed_certify(Format(2, 2, 2), 4)


_ACCEPTANCE_LINES: list[str] = []


class AcceptanceRecorder:
    """Collects (label, ok) checks and emits one PASS/FAIL line."""

    def __init__(self, name: str):
        self.name = name
        self.checks: list[tuple[str, bool]] = []

    def check(self, label: str, ok: bool) -> None:
        self.checks.append((label, bool(ok)))

    def skip(self, reason: str):
        line = f"ACCEPTANCE {self.name}: SKIPPED ({reason})"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        pytest.skip(reason)

    def conclude(self) -> None:
        failed = [label for label, ok in self.checks if not ok]
        line = f"ACCEPTANCE {self.name}: " + (
            "PASS" if not failed else "FAIL [" + "; ".join(failed) + "]"
        )
        _ACCEPTANCE_LINES.append(line)
        print(line)
        assert not failed, line


@pytest.fixture
def acceptance(request):
    name = request.node.name.removeprefix("test_")
    return AcceptanceRecorder(name)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
