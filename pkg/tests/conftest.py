import random

import pytest
from hypothesis import settings

from ffsolve import Mat

from helpers import GOLDEN

settings.register_profile("ci", max_examples=200, deadline=None)
settings.load_profile("ci")


@pytest.fixture
def golden():
    return Mat(GOLDEN)


@pytest.fixture
def rng():
    return random.Random(20241018)


_ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for the acceptance summary; fails the test if not ok."""

    def record(ok: bool, detail: str):
        _ACCEPTANCE[request.node.name] = (bool(ok), detail)
        assert ok, detail

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
