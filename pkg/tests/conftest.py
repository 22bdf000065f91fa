import pytest

from windassess import WeibullModel, standard_curve

THUMRAIT = (2.16538, 6.38352)
MAJIS = (3.51997, 2.95436)
SEEB = (3.10993, 3.15723)
DUQM = (1.88304, 4.97057)


@pytest.fixture
def thumrait():
    return WeibullModel(*THUMRAIT)


@pytest.fixture
def duqm():
    return WeibullModel(*DUQM)


@pytest.fixture(scope="session")
def curve():
    return standard_curve()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
