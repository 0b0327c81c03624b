import os
import subprocess
import sys

import numpy as np
import pytest

from greedy_crossings import _backend
from greedy_crossings.crossings import build_crossing_graph
from greedy_crossings.generators import uniform_points
from greedy_crossings.spanner import GREEDY_TOL, SpannerConfig, greedy_spanner_fast, sorted_pairs

compiled = pytest.mark.skipif(_backend.compiled_kernels is None, reason="extension not built")
C, PY = _backend.compiled_kernels, _backend.python_kernels


@compiled
@pytest.mark.parametrize("seed", range(5))
@pytest.mark.parametrize("t", [1.1, 1.5, 2.0, 3.0])
def test_greedy_backends_agree(seed, t):
    P = uniform_points(90, seed)
    pi, pj, pd = sorted_pairs(P)
    outs = []
    for k in (C, PY):
        for fn in (k.greedy_naive, k.greedy_fast):
            ei, ej, _ = fn(len(P), pi, pj, pd, t, GREEDY_TOL)
            outs.append((ei.tolist(), ej.tolist()))
    assert all(o == outs[0] for o in outs)


@pytest.mark.parametrize("kern", [k for k in _backend.available()], ids=lambda k: k.NAME)
def test_fast_runs_fewer_searches(kern):
    P = uniform_points(150, 3)
    pi, pj, pd = sorted_pairs(P)
    *_, naive = kern.greedy_naive(len(P), pi, pj, pd, 1.5, GREEDY_TOL)
    *_, fast = kern.greedy_fast(len(P), pi, pj, pd, 1.5, GREEDY_TOL)
    assert naive == len(pi)
    assert fast < naive / 10


@compiled
@pytest.mark.parametrize("seed", range(4))
def test_crossing_scan_backends_agree(seed):
    g = greedy_spanner_fast(uniform_points(200, seed), SpannerConfig(1.2))
    a = build_crossing_graph(g, C)
    b = build_crossing_graph(g, PY)
    assert a.adjacency == b.adjacency
    assert a.crossing_points == b.crossing_points


def test_candidate_status_codes():
    # X, a shared endpoint (unsure, resolved exactly) and a disjoint pair
    x1 = np.array([0.0, 0.0, 5.0])
    y1 = np.array([0.0, 1.0, 5.0])
    x2 = np.array([1.0, 1.0, 6.0])
    y2 = np.array([1.0, 0.0, 6.0])
    for k in _backend.available():
        ii, jj, st = k.crossing_candidates(x1, y1, x2, y2)
        got = {(int(i), int(j)): int(s) for i, j, s in zip(ii, jj, st)}
        assert got.get((0, 1)) == 1
        assert (0, 2) not in got and (1, 2) not in got


def test_pure_env_var_selects_python():
    env = dict(os.environ, GREEDY_CROSSINGS_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "import greedy_crossings as g; print(g.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


@compiled
def test_default_backend_is_compiled():
    env = {k: v for k, v in os.environ.items() if k != "GREEDY_CROSSINGS_PURE"}
    out = subprocess.run(
        [sys.executable, "-c", "import greedy_crossings as g; print(g.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "cython"
