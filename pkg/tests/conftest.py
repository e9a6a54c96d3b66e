import pytest

from mdsdual.field import field_new

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def gf9():
    return field_new(3, 1)


@pytest.fixture(scope="session")
def gf25():
    return field_new(5, 1)


@pytest.fixture(scope="session")
def gf49():
    return field_new(7, 1)


@pytest.fixture(scope="session")
def gf81():
    return field_new(3, 2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
