from __future__ import annotations

import pytest

from warpdeg.codec import parse_gauss, parse_pd, realize
from warpdeg.census import enumerate_knot_shadows, enumerate_link_shadows

FIG4_PD = "P[(1,8,10,7),(10,4,9,5),(9,4,8,3),(7,2,6,1),(6,2,5,3)]"
FIG4_ROWS = (
    (1, 1, 1, 0, 0, 0, 1),
    (1, 1, 1, 1, 0, 0, 0),
    (1, 0, 0, 1, 1, 0, 1),
    (0, 0, 0, 1, 1, 1, 1),
    (0, 0, 1, 1, 0, 1, 1),
)

# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def from_gauss(text):
    (s,) = realize(parse_gauss(text))
    return s


def curl_curl_shadow():
    # of the two realizations of 1 1 2 2, take the one where a single region
    # fills opposite quadrants at both crossings
    for s in realize(parse_gauss("1 1 2 2")):
        shared = set.intersection(*(
            {q[k] for k in (0, 1) if q[k] == q[k + 2]}
            for q in (s.quadrants(0), s.quadrants(1))
        ))
        if shared:
            return s
    raise AssertionError("no curl-curl realization with a shared outer region")


@pytest.fixture(scope="session")
def trefoil():
    return from_gauss("1 2 3 1 2 3")


@pytest.fixture(scope="session")
def torus5():
    return from_gauss("1 2 3 4 5 1 2 3 4 5")


@pytest.fixture(scope="session")
def torus7():
    return from_gauss("1 2 3 4 5 6 7 1 2 3 4 5 6 7")


@pytest.fixture(scope="session")
def curl_curl():
    return curl_curl_shadow()


@pytest.fixture(scope="session")
def fig4():
    return parse_pd(FIG4_PD)


@pytest.fixture(scope="session")
def knot_census_6():
    return [s for c in range(1, 7) for s in enumerate_knot_shadows(c, reduced_only=False)]


@pytest.fixture(scope="session")
def reduced_knots_7():
    return [s for c in range(3, 8) for s in enumerate_knot_shadows(c)]


@pytest.fixture(scope="session")
def link_census_6():
    return [s for c in range(1, 7) for s in enumerate_link_shadows(c)]
