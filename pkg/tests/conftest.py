import pytest

from phicyclic.field import field_make
from phicyclic.ntru import params_validate


@pytest.fixture
def F2():
    return field_make(2)


@pytest.fixture
def F3():
    return field_make(3)


@pytest.fixture
def tiny_params():
    return params_validate(2, 29, 3, 0, (1, 0))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
