import pytest

from rrcrystals.rootsystem import ALL_TYPES

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=ALL_TYPES, ids=lambda t: t.value)
def affine_type(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
