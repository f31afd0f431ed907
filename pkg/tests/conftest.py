import pytest

from mulcon import QQ, FieldDescriptor

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def gf():
    return FieldDescriptor.prime(65537)


@pytest.fixture
def qq():
    return QQ


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
