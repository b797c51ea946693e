from __future__ import annotations

import time
from contextlib import contextmanager

import pytest

from skewlagrange.oracle import RandomInstances
from skewlagrange.scalars import Quaternion

CRITERIA: dict[int, tuple[str, str]] = {}


def record(number: int, title: str, passed: bool) -> None:
    CRITERIA[number] = (title, "PASS" if passed else "FAIL")


@contextmanager
def criterion(number: int, title: str, limit: float):
    """Record PASS only if the block finishes without error inside ``limit`` seconds."""
    start = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"took {elapsed:.1f} s, limit {limit} s"
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        record(number, f"{title} ({elapsed:.1f} s)", ok)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        title, verdict = CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {verdict}  {title}")


@pytest.fixture
def gen() -> RandomInstances:
    return RandomInstances(20261016)


def q(text: str) -> Quaternion:
    return Quaternion.parse(text)
