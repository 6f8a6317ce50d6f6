import pytest

from specular import fixtures


@pytest.fixture(scope="session")
def fib():
    return fixtures.load("fibonacci").factor_set(12)


@pytest.fixture(scope="session")
def cassaigne():
    return fixtures.load("cassaigne").factor_set(14)


@pytest.fixture(scope="session")
def doubled():
    return fixtures.load("doubled-fibonacci").factor_set(14)


@pytest.fixture(scope="session")
def golden():
    return fixtures.load("golden-involution").factor_set(8)


@pytest.fixture(scope="session")
def doubled_deep():
    return fixtures.load("doubled-fibonacci").factor_set(50)


@pytest.fixture(scope="session")
def cassaigne_deep():
    return fixtures.load("cassaigne").factor_set(50)


@pytest.fixture(scope="session")
def golden_deep():
    return fixtures.load("golden-involution").factor_set(60)



ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
