import random

import pytest

from bgpoly.graphs import Graph, complete_graph, disjoint_union

DATA = __import__("pathlib").Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def data_dir():
    return DATA


def two_triangles() -> Graph:
    return disjoint_union(complete_graph(3), complete_graph(3))


def random_graph(rng, d, p=0.5) -> Graph:
    return Graph(d, tuple((u, v) for u in range(1, d + 1) for v in range(u + 1, d + 1) if rng.random() < p))


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
