from itertools import combinations

import pytest
from hypothesis import settings

from brouwer_excess.graphs import Graph, erdos_renyi

# brute-force oracles are slow on the densest examples
settings.register_profile("default", deadline=None)
settings.load_profile("default")


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_mask(n, mask)


@pytest.fixture(scope="session")
def small_corpus():
    """Every labeled graph on at most 5 vertices plus some random 6-8 vertex graphs."""
    graphs = [g for n in range(1, 6) for g in all_graphs(n)]
    graphs += [erdos_renyi(n, p, seed) for n in (6, 7, 8) for p in (0.3, 0.6) for seed in range(5)]
    return graphs


# filled by test_acceptance.verdict, echoed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
