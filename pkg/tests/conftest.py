from fractions import Fraction as F

import pytest

from circnet import network


def star_net(w=(1, 1, 1)):
    """The star of three spokes with one inner vertex (vertex 4)."""
    return network(3, [(1, 4, w[0]), (2, 4, w[1]), (3, 4, w[2])],
                   rotation={1: (1,), 2: (2,), 3: (3,), 4: (1, 2, 3)})


def edge_net(w=2):
    return network(2, [(1, 2, w)], rotation={1: (1,), 2: (1,)})


def path_net():
    return network(2, [(1, 3, 1), (3, 2, 1)], rotation={1: (1,), 2: (2,), 3: (1, 2)})


def cycle4_net(w=(1, 1, 1, 1)):
    return network(4, [(1, 2, w[0]), (2, 3, w[1]), (3, 4, w[2]), (4, 1, w[3])],
                   rotation={1: (1, 4), 2: (2, 1), 3: (3, 2), 4: (4, 3)})


def triangle_net(w=(1, 1, 1)):
    return network(3, [(1, 2, w[0]), (2, 3, w[1]), (3, 1, w[2])],
                   rotation={1: (1, 3), 2: (2, 1), 3: (3, 2)})


def rationals(*xs):
    return [F(x) for x in xs]


STAR_R = [[F(0), F(2), F(2)], [F(2), F(0), F(2)], [F(2), F(2), F(0)]]
CYCLE4_R = [[F(0), F(3, 4), F(1), F(3, 4)],
            [F(3, 4), F(0), F(3, 4), F(1)],
            [F(1), F(3, 4), F(0), F(3, 4)],
            [F(3, 4), F(1), F(3, 4), F(0)]]


@pytest.fixture
def star():
    return star_net()


@pytest.fixture
def single_edge():
    return edge_net()


@pytest.fixture
def path():
    return path_net()


@pytest.fixture
def cycle4():
    return cycle4_net()


# -- acceptance summary ----------------------------------------------------------

_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "acceptance" in report.keywords:
        _ACCEPTANCE[report.nodeid] = "PASS" if report.passed else "FAIL"
    elif report.when == "setup" and report.failed and "acceptance" in report.keywords:
        _ACCEPTANCE[report.nodeid] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, status in _ACCEPTANCE.items():
        terminalreporter.write_line(f"{status}  {nodeid.split('::')[-1]}")
