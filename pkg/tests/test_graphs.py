import numpy as np
import pytest

from framecond import (
    DisconnectedGraphError,
    WeightedGraph,
    barbell_graph,
    conjecture_experiment,
    effective_resistance,
    graph_condition,
    graph_gap,
    incidence_matrix,
    laplacian,
    projected_laplacian,
    resistance_summary,
)
from conftest import k4_minus_edge, random_connected_graph


def complete_graph(n):
    return WeightedGraph(n, tuple((i, j, 1.0) for i in range(n) for j in range(i + 1, n)))


def test_graph_validation():
    with pytest.raises(ValueError):
        WeightedGraph(1, ())
    with pytest.raises(ValueError):
        WeightedGraph(3, ((0, 0, 1.0),))
    with pytest.raises(ValueError):
        WeightedGraph(3, ((0, 1, 1.0), (1, 0, 2.0)))  # duplicate after canonicalization
    with pytest.raises(ValueError):
        WeightedGraph(3, ((0, 1, -1.0),))
    with pytest.raises(ValueError):
        WeightedGraph(3, ((0, 5, 1.0),))


def test_edges_canonicalized():
    g = WeightedGraph(3, ((2, 0, 1.5),))
    assert g.edges == ((0, 2, 1.5),)
    assert g.weights == pytest.approx([1.5])


def test_connectivity():
    assert complete_graph(4).is_connected()
    assert not WeightedGraph(4, ((0, 1, 1.0), (2, 3, 1.0))).is_connected()


def test_laplacian_factorization(rng):
    for _ in range(10):
        g = random_connected_graph(rng, int(rng.integers(3, 9)))
        b = incidence_matrix(g)
        lap = laplacian(g)
        assert b @ b.T == pytest.approx(lap, abs=1e-12)
        assert lap @ np.ones(g.vertex_count) == pytest.approx(
            np.zeros(g.vertex_count), abs=1e-12
        )


def test_triangle_laplacian():
    lap = laplacian(complete_graph(3))
    assert lap == pytest.approx(np.array([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]), abs=0)


def test_projected_laplacian_complete_graph():
    l0, ftilde = projected_laplacian(laplacian(complete_graph(5)))
    assert l0 == pytest.approx(5.0 * np.eye(4), abs=1e-9)
    assert ftilde.T @ ftilde == pytest.approx(np.eye(4), abs=1e-12)


def test_projected_laplacian_disconnected():
    g = WeightedGraph(4, ((0, 1, 1.0), (2, 3, 1.0)))
    with pytest.raises(DisconnectedGraphError):
        projected_laplacian(laplacian(g))
    with pytest.raises(DisconnectedGraphError):
        graph_condition(g)


def test_condition_k4_minus_edge():
    report = graph_condition(k4_minus_edge())
    assert report.status == "optimal"
    assert report.after.condition_number == pytest.approx(2.0, abs=1e-6)
    # Trace matching preserves the total edge weight mass.
    original = laplacian(k4_minus_edge()).trace()
    assert report.trace_matched_laplacian.trace() == pytest.approx(original, abs=1e-9)
    assert np.all(report.trace_matched_scalings > 0)  # stays connected


def test_condition_complete_graph_already_optimal():
    report = graph_condition(complete_graph(5))
    assert report.status == "optimal"
    assert report.after.condition_number == pytest.approx(1.0, abs=1e-6)
    scalings = report.edge_scalings
    assert scalings == pytest.approx(np.full(scalings.size, scalings[0]), rel=1e-4)


def test_gap_complete_graph_already_optimal():
    report = graph_gap(complete_graph(4))
    assert report.status == "optimal"
    assert report.after.gap == pytest.approx(0.0, abs=1e-6)
    assert report.after.trace == pytest.approx(3.0, abs=1e-6)


def test_projection_is_mean_removal(rng):
    for _ in range(5):
        g = random_connected_graph(rng, int(rng.integers(3, 8)))
        n = g.vertex_count
        _, ftilde = projected_laplacian(laplacian(g))
        assert ftilde.T @ ftilde == pytest.approx(np.eye(n - 1), abs=1e-10)
        assert ftilde @ ftilde.T == pytest.approx(
            np.eye(n) - np.ones((n, n)) / n, abs=1e-10
        )


def test_projected_spectrum_matches_nonzero_spectrum(rng):
    for _ in range(5):
        g = random_connected_graph(rng, int(rng.integers(3, 8)))
        lap = laplacian(g)
        l0, _ = projected_laplacian(lap)
        assert np.linalg.eigvalsh(l0) == pytest.approx(
            np.linalg.eigvalsh(lap)[1:], abs=1e-9
        )


def test_resistance_is_a_metric(rng):
    for _ in range(10):
        g = random_connected_graph(rng, int(rng.integers(3, 9)))
        n = g.vertex_count
        r = np.array(
            [[effective_resistance(g, i, j) for j in range(n)] for i in range(n)]
        )
        assert r == pytest.approx(r.T, abs=1e-10)
        off = r[~np.eye(n, dtype=bool)]
        assert np.all(off > 0)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    assert r[i, j] <= r[i, k] + r[k, j] + 1e-9


def test_gap_path_graph_improves():
    path = WeightedGraph(3, ((0, 1, 1.0), (1, 2, 1.0)))
    report = graph_gap(path)
    assert report.status == "optimal"
    assert report.after.gap < report.before.gap * report.after.trace / report.before.trace


def test_effective_resistance_path_and_triangle():
    path = WeightedGraph(3, ((0, 1, 1.0), (1, 2, 1.0)))
    assert effective_resistance(path, 0, 2) == pytest.approx(2.0, abs=1e-12)
    assert effective_resistance(path, 0, 0) == 0.0
    tri = complete_graph(3)
    assert effective_resistance(tri, 0, 1) == pytest.approx(2.0 / 3.0, abs=1e-12)
    with pytest.raises(ValueError):
        effective_resistance(tri, 0, 7)


def test_resistance_summary_triangle():
    stats = resistance_summary(complete_graph(3))
    assert stats.total == pytest.approx(4.0, abs=1e-10)
    assert stats.average == pytest.approx(2.0 / 3.0, abs=1e-10)


def test_resistance_series_parallel():
    # Weight-2 edge in series with a half-weight edge: R = 1/2 + 2 = 2.5.
    g = WeightedGraph(3, ((0, 1, 2.0), (1, 2, 0.5)))
    assert effective_resistance(g, 0, 2) == pytest.approx(2.5, abs=1e-12)


def test_barbell_graph_shape():
    g = barbell_graph(3)
    assert g.vertex_count == 6
    assert g.edge_count == 7
    assert g.is_connected()


def test_conjecture_experiment_deterministic():
    a = conjecture_experiment("erdos_renyi", {"n": 7, "p": 0.5}, trials=3, seed=11)
    b = conjecture_experiment("erdos_renyi", {"n": 7, "p": 0.5}, trials=3, seed=11)
    assert a == b
    assert a.trials == 3
    assert 0.0 <= a.decrease_fraction <= 1.0
    for rec in a.records:
        assert rec.average_before > 0 and rec.average_after > 0


def test_conjecture_experiment_validation():
    with pytest.raises(ValueError):
        conjecture_experiment("erdos_renyi", {"n": 5, "p": 0.5}, trials=0, seed=0)
    with pytest.raises(ValueError):
        conjecture_experiment("mystery", {}, trials=1, seed=0)
