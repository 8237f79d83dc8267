import math

import numpy as np
import pytest

from majradius.catalog import CASE_IDS, make_case

HALF_PLANE_RADIUS = 2 - math.sqrt(3)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(params=CASE_IDS)
def catalog_case(request):
    return make_case(request.param)


def disk_points(rng, n, rmax=0.95):
    rad = rmax * np.sqrt(rng.uniform(0, 1, n))
    return rad * np.exp(2j * math.pi * rng.uniform(0, 1, n))


ACCEPTANCE_LINES = []


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name, _, param = report.nodeid.split("::")[-1].partition("[")
    doc = ACCEPTANCE_DOCS.get(name)
    if doc:
        suffix = f" [{param}" if param else ""
        ACCEPTANCE_LINES.append(f"{'PASS' if report.passed else 'FAIL'}  {doc}{suffix}")


ACCEPTANCE_DOCS = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
