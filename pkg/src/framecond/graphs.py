"""Weighted graphs, Laplacians, and edge reweighting.

The reduction to frame conditioning: project the Laplacian onto the
complement of the constant vector, treat the projected incidence columns
as a frame in R^(N-1), and reuse the scaling optimizers.  Reweighting a
connected graph this way provably keeps it connected.
"""

from dataclasses import dataclass

import numpy as np

from .conditioners import SolverOptions, solve_sdp2, solve_sdp3
from .exceptions import DisconnectedGraphError
from .frames import Frame, SpectralSummary, summarize

__all__ = [
    "WeightedGraph",
    "GraphConditionReport",
    "ResistanceSummary",
    "TrialRecord",
    "ExperimentReport",
    "incidence_matrix",
    "laplacian",
    "projected_laplacian",
    "graph_condition",
    "graph_gap",
    "effective_resistance",
    "resistance_summary",
    "conjecture_experiment",
]


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected weighted graph on vertices ``0 .. vertex_count - 1``.

    Edges are stored with endpoints in canonical ``u < v`` order.
    Disconnected graphs may be constructed, but every conditioning
    operation rejects them.
    """

    vertex_count: int
    edges: tuple  # of (u, v, w)

    def __post_init__(self):
        n = int(self.vertex_count)
        if n < 2:
            raise ValueError("vertex_count must be >= 2")
        seen = set()
        canon = []
        for item in self.edges:
            u, v, w = int(item[0]), int(item[1]), float(item[2])
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has a vertex outside [0, {n})")
            if not (np.isfinite(w) and w > 0):
                raise ValueError(f"edge ({u}, {v}) has nonpositive weight {w}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
            canon.append((key[0], key[1], w))
        object.__setattr__(self, "vertex_count", n)
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def edge_count(self):
        return len(self.edges)

    @property
    def weights(self):
        return np.array([w for _, _, w in self.edges])

    def is_connected(self):
        n = self.vertex_count
        adj = [[] for _ in range(n)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = np.zeros(n, dtype=bool)
        stack = [0]
        seen[0] = True
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        return bool(seen.all())

    def reweighted(self, weights):
        """Same topology with new positive edge weights."""
        weights = np.asarray(weights, dtype=float)
        if weights.size != self.edge_count:
            raise ValueError("weight count does not match edge count")
        return WeightedGraph(
            self.vertex_count,
            tuple((u, v, float(w)) for (u, v, _), w in zip(self.edges, weights)),
        )


def incidence_matrix(graph):
    """N x m signed incidence matrix; column for edge (u, v, w) is
    ``sqrt(w) * (e_u - e_v)`` with u < v."""
    b = np.zeros((graph.vertex_count, graph.edge_count))
    for j, (u, v, w) in enumerate(graph.edges):
        root = np.sqrt(w)
        b[u, j] = root
        b[v, j] = -root
    return b


def laplacian(graph):
    """Weighted graph Laplacian (degree minus adjacency)."""
    n = graph.vertex_count
    lap = np.zeros((n, n))
    for u, v, w in graph.edges:
        lap[u, u] += w
        lap[v, v] += w
        lap[u, v] -= w
        lap[v, u] -= w
    return lap


def projected_laplacian(lap, tol=1e-9):
    """Restrict a connected-graph Laplacian to its nonzero eigenspace.

    Returns ``(L0, Ftilde)`` where the columns of the N x (N-1) matrix
    ``Ftilde`` are the Laplacian eigenvectors excluding the constant one
    and ``L0 = Ftilde^T L Ftilde`` is positive definite with the nonzero
    Laplacian spectrum.  Raises :class:`DisconnectedGraphError` when the
    zero eigenvalue is not simple.
    """
    lap = np.asarray(lap, dtype=float)
    w, v = np.linalg.eigh(lap)
    scale = max(1.0, float(w[-1]))
    if w.size < 2 or w[1] <= tol * scale:
        raise DisconnectedGraphError("zero eigenvalue is not simple (graph disconnected)")
    ftilde = v[:, 1:]
    l0 = ftilde.T @ lap @ ftilde
    return (l0 + l0.T) / 2.0, ftilde


@dataclass(frozen=True)
class GraphConditionReport:
    """Result of reweighting a graph for condition number or spectral gap.

    ``edge_scalings`` is the raw optimizer output (the diagonal of X^2);
    ``conditioned_laplacian`` is built from it.  The trace-matched
    fields rescale every weight by a common factor so the conditioned
    Laplacian keeps the original trace; the condition number is
    identical under either normalization.
    """

    edge_scalings: np.ndarray
    conditioned_laplacian: np.ndarray
    trace_matched_scalings: np.ndarray
    trace_matched_laplacian: np.ndarray
    before: SpectralSummary
    after: SpectralSummary
    status: str
    iterations: int
    kkt_residual: float


def _projected_frame(graph):
    if not graph.is_connected():
        raise DisconnectedGraphError("conditioning requires a connected graph")
    lap = laplacian(graph)
    l0, ftilde = projected_laplacian(lap)
    return lap, l0, ftilde, Frame(ftilde.T @ incidence_matrix(graph))


def _condition_report(graph, lap, l0, ftilde, solver_report):
    if solver_report.scaling is None:
        raise DisconnectedGraphError("solver returned no scaling")
    u = solver_report.scaling
    # New edge weight = old weight * u (incidence columns carry sqrt(w)).
    new_weights = graph.weights * u
    conditioned = graph.reweighted(np.maximum(new_weights, 1e-300))
    lap_new = laplacian(conditioned)
    factor = lap.trace() / lap_new.trace()
    return GraphConditionReport(
        edge_scalings=u,
        conditioned_laplacian=lap_new,
        trace_matched_scalings=u * factor,
        trace_matched_laplacian=lap_new * factor,
        before=summarize(l0),
        after=summarize(ftilde.T @ lap_new @ ftilde),
        status=solver_report.status,
        iterations=solver_report.iterations,
        kkt_residual=solver_report.kkt_residual,
    )


def graph_condition(graph, opts=SolverOptions()):
    """Reweight edges to minimize the condition number of the projected
    Laplacian (minimum-upper-frame-bound program on the projected
    incidence frame; the raw solution has smallest eigenvalue 1)."""
    lap, l0, ftilde, frame = _projected_frame(graph)
    report = solve_sdp2(frame, opts)
    return _condition_report(graph, lap, l0, ftilde, report)


def graph_gap(graph, opts=SolverOptions()):
    """Reweight edges to minimize the spectral gap of the projected
    Laplacian with its mean eigenvalue pinned at 1 (trace = N - 1)."""
    lap, l0, ftilde, frame = _projected_frame(graph)
    report = solve_sdp3(frame, opts)
    return _condition_report(graph, lap, l0, ftilde, report)


def effective_resistance(graph, i, j):
    """Effective resistance between two vertices, via the Laplacian
    pseudoinverse quadratic form (safe for repeated eigenvalues)."""
    n = graph.vertex_count
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError("vertex index out of range")
    if i == j:
        return 0.0
    if not graph.is_connected():
        raise DisconnectedGraphError("effective resistance requires a connected graph")
    pinv = np.linalg.pinv(laplacian(graph), hermitian=True)
    return float(pinv[i, i] + pinv[j, j] - 2.0 * pinv[i, j])


@dataclass(frozen=True)
class ResistanceSummary:
    """Total resistance over ordered vertex pairs and its average."""

    total: float
    average: float


def resistance_summary(graph):
    """Total and average effective resistance over ordered vertex pairs."""
    if not graph.is_connected():
        raise DisconnectedGraphError("effective resistance requires a connected graph")
    n = graph.vertex_count
    pinv = np.linalg.pinv(laplacian(graph), hermitian=True)
    d = np.diag(pinv)
    r = d[:, None] + d[None, :] - 2.0 * pinv
    total = float(r.sum())  # diagonal contributes 0
    return ResistanceSummary(total=total, average=total / (n * (n - 1)))


@dataclass(frozen=True)
class TrialRecord:
    trial: int
    vertex_count: int
    edge_count: int
    average_before: float
    average_after: float
    decreased: bool


@dataclass(frozen=True)
class ExperimentReport:
    """Empirical check of whether conditioning lowers average resistance.

    Carries no correctness verdict: it reports the fraction of trials
    where the trace-matched conditioned graph had lower average
    effective resistance.
    """

    generator: str
    params: dict
    trials: int
    seed: int
    records: tuple
    decrease_fraction: float
    mean_average_before: float
    mean_average_after: float


def _generate_graph(generator, params, seed_sequence):
    import networkx as nx

    child_seed = int(seed_sequence.generate_state(1)[0])
    if generator == "erdos_renyi":
        g = nx.gnp_random_graph(params["n"], params["p"], seed=child_seed)
    elif generator == "barbell":
        g = nx.barbell_graph(params["k"], 0)
    elif generator == "random_regular":
        g = nx.random_regular_graph(params["d"], params["n"], seed=child_seed)
    else:
        raise ValueError(f"unknown generator {generator!r}")
    if g.number_of_nodes() < 2 or not nx.is_connected(g):
        return None
    return WeightedGraph(g.number_of_nodes(), tuple((u, v, 1.0) for u, v in g.edges()))


def barbell_graph(k):
    """Two complete graphs on k vertices joined by a single bridge edge."""
    import networkx as nx

    g = nx.barbell_graph(k, 0)
    return WeightedGraph(g.number_of_nodes(), tuple((u, v, 1.0) for u, v in g.edges()))


def conjecture_experiment(generator, params, trials, seed, opts=SolverOptions(), max_attempts=100):
    """Condition random connected graphs and record the average effective
    resistance before and after (trace-matched normalization).

    The per-trial random stream is derived deterministically from
    ``(seed, trial, attempt)``, so reports are reproducible and trials
    are order-independent.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    records = []
    for trial in range(trials):
        graph = None
        for attempt in range(max_attempts):
            graph = _generate_graph(generator, params, np.random.SeedSequence([seed, trial, attempt]))
            if graph is not None:
                break
        if graph is None:
            raise RuntimeError(
                f"generator {generator!r} produced no connected graph in {max_attempts} attempts"
            )
        before = resistance_summary(graph).average
        report = graph_condition(graph, opts)
        conditioned = graph.reweighted(graph.weights * report.trace_matched_scalings)
        after = resistance_summary(conditioned).average
        records.append(
            TrialRecord(
                trial=trial,
                vertex_count=graph.vertex_count,
                edge_count=graph.edge_count,
                average_before=before,
                average_after=after,
                decreased=bool(after < before),
            )
        )
    frac = sum(r.decreased for r in records) / trials
    return ExperimentReport(
        generator=generator,
        params=dict(params),
        trials=trials,
        seed=seed,
        records=tuple(records),
        decrease_fraction=frac,
        mean_average_before=float(np.mean([r.average_before for r in records])),
        mean_average_after=float(np.mean([r.average_after for r in records])),
    )
