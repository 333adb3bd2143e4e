"""Shared constructions for the test suite."""

import numpy as np
import pytest

from framecond import Frame


def mercedes_frame():
    """Three unit vectors at 120-degree spacing in R^2 (a tight frame
    with frame operator (3/2) I)."""
    angles = np.array([np.pi / 2, np.pi / 2 + 2 * np.pi / 3, np.pi / 2 + 4 * np.pi / 3])
    return Frame(np.vstack([np.cos(angles), np.sin(angles)]))


def example_frame_3x5():
    """A 5-element integer frame in R^3 with badly spread spectrum."""
    return Frame(
        np.array(
            [
                [2.0, 4.0, 1.0, 4.0, 4.0],
                [3.0, 1.0, 2.0, 0.0, 2.0],
                [1.0, 4.0, 3.0, 5.0, 2.0],
            ]
        )
    )


def random_scalable_frame(rng, n=None, m=None):
    """Parseval frame times a random positive diagonal: scalable by
    construction with certificate u_i = 1 / d_i^2."""
    if n is None:
        n = int(rng.integers(3, 7))
    if m is None:
        m = int(rng.integers(n, 2 * n + 1))
    f = rng.standard_normal((n, m))
    while np.linalg.matrix_rank(f) < n:
        f = rng.standard_normal((n, m))
    s = f @ f.T
    w, v = np.linalg.eigh(s)
    root_inv = v @ np.diag(1.0 / np.sqrt(w)) @ v.T
    d = rng.uniform(0.5, 2.0, size=m)
    return Frame((root_inv @ f) * d), 1.0 / d**2


def random_frame(rng, n, m):
    f = rng.standard_normal((n, m))
    while np.linalg.matrix_rank(f) < n:
        f = rng.standard_normal((n, m))
    return Frame(f)


def random_connected_graph(rng, n):
    """Random spanning tree plus extra random edges, random weights."""
    from framecond import WeightedGraph

    edges = {}
    order = rng.permutation(n)
    for idx in range(1, n):
        u = int(order[idx])
        v = int(order[rng.integers(0, idx)])
        edges[(min(u, v), max(u, v))] = float(rng.uniform(0.2, 3.0))
    extra = int(rng.integers(0, n))
    for _ in range(extra):
        u, v = rng.integers(0, n, size=2)
        if u != v:
            key = (int(min(u, v)), int(max(u, v)))
            edges.setdefault(key, float(rng.uniform(0.2, 3.0)))
    return WeightedGraph(n, tuple((u, v, w) for (u, v), w in edges.items()))


def k4_minus_edge():
    """Complete graph on 4 vertices with one edge removed."""
    from framecond import WeightedGraph

    return WeightedGraph(4, ((0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0), (1, 2, 1.0), (2, 3, 1.0)))


@pytest.fixture
def rng():
    return np.random.default_rng(0)
