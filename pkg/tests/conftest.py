import hashlib
import json
import os

import pytest

from greedy_crossings.spanner import SpannerConfig, SpannerGraph, greedy_spanner_naive

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")

SQUARE = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
COLLINEAR4 = [(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (3.0, 0.0)]


def load_fixture(name):
    with open(os.path.join(FIXTURES, name), encoding="utf-8") as fh:
        return json.load(fh)


def edge_digest(g):
    """Short fingerprint of an edge list."""
    text = "\n".join(f"{i} {j}" for i, j, _ in g.edges)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def graph(points, pairs, t=None):
    return SpannerGraph.from_pairs(points, pairs, t)


@pytest.fixture
def square_spanner():
    return greedy_spanner_naive(SQUARE, SpannerConfig(1.5))


@pytest.fixture
def x_pattern():
    return graph([(0, 0), (2, 2), (0, 2), (2, 0)], [(0, 1), (2, 3)], 2.0)


@pytest.fixture
def star3():
    # horizontal edge 0-1 crossed by three disjoint verticals
    pts = [(0, 0), (4, 0), (1, -1), (1, 1), (2, -1), (2, 1), (3, -1), (3, 1)]
    return graph(pts, [(0, 1), (2, 3), (4, 5), (6, 7)], 2.0)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
