"""Scikit-learn style estimators wrapping the scaling optimizers.

These follow the fit/transform convention so the conditioners compose
with sklearn pipelines and model-selection utilities: rows of ``X`` are
frame vectors (samples), and ``transform`` applies the learned scales.
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .conditioners import SolverOptions, solve_qp4, solve_sdp1, solve_sdp2, solve_sdp3
from .frames import Frame
from .graphs import WeightedGraph, graph_condition, graph_gap

__all__ = ["FrameScaler", "GraphReweighter"]

_FRAME_SOLVERS = {
    "sdp1": solve_sdp1,
    "sdp2": solve_sdp2,
    "sdp3": solve_sdp3,
    "qp4": solve_qp4,
}


class FrameScaler(BaseEstimator, TransformerMixin):
    """Learn nonnegative per-vector scales that condition a frame.

    Parameters
    ----------
    method : {"sdp1", "sdp2", "sdp3", "qp4"}
        Which objective to optimize: operator-norm distance to the
        identity, minimum upper frame bound, spectral gap at unit mean
        eigenvalue, or Frobenius distance to the identity.
    objective_tolerance, feasibility_tolerance, max_iterations, seed
        Solver options; see :class:`SolverOptions`.

    Attributes
    ----------
    scaling_ : ndarray of shape (n_samples,)
        Optimal squared weights u.
    scales_ : ndarray of shape (n_samples,)
        Plain scales ``sqrt(u)`` applied by :meth:`transform`.
    report_ : SolverReport
        Full diagnostics, including before/after spectral summaries.
    """

    def __init__(
        self,
        method="sdp1",
        objective_tolerance=1e-6,
        feasibility_tolerance=1e-8,
        max_iterations=10_000,
        seed=0,
    ):
        self.method = method
        self.objective_tolerance = objective_tolerance
        self.feasibility_tolerance = feasibility_tolerance
        self.max_iterations = max_iterations
        self.seed = seed

    def _options(self):
        return SolverOptions(
            max_iterations=self.max_iterations,
            objective_tolerance=self.objective_tolerance,
            feasibility_tolerance=self.feasibility_tolerance,
            seed=self.seed,
        )

    def fit(self, X, y=None):
        if self.method not in _FRAME_SOLVERS:
            raise ValueError(f"method must be one of {sorted(_FRAME_SOLVERS)}, got {self.method!r}")
        X = check_array(X, dtype=float)
        frame = Frame(X.T)  # rows are frame vectors
        self.report_ = _FRAME_SOLVERS[self.method](frame, self._options())
        self.scaling_ = self.report_.scaling
        self.scales_ = self.report_.scales
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "scales_")
        X = check_array(X, dtype=float)
        if X.shape[0] != self.scales_.size:
            raise ValueError(
                f"X has {X.shape[0]} rows but {self.scales_.size} scales were fitted"
            )
        return X * self.scales_[:, None]


class GraphReweighter(BaseEstimator):
    """Reweight the edges of a connected graph to condition its Laplacian.

    Parameters
    ----------
    objective : {"condition", "gap"}
        Minimize the condition number of the projected Laplacian, or its
        spectral gap at fixed trace.
    normalization : {"unit_lower", "trace"}
        Report weights with the smallest projected eigenvalue at 1, or
        rescaled to preserve the original Laplacian trace.

    Attributes
    ----------
    edge_scalings_ : ndarray of shape (n_edges,)
        Multiplier for each edge weight, in the requested normalization.
    report_ : GraphConditionReport
    """

    def __init__(
        self,
        objective="condition",
        normalization="trace",
        objective_tolerance=1e-6,
        feasibility_tolerance=1e-8,
        max_iterations=10_000,
        seed=0,
    ):
        self.objective = objective
        self.normalization = normalization
        self.objective_tolerance = objective_tolerance
        self.feasibility_tolerance = feasibility_tolerance
        self.max_iterations = max_iterations
        self.seed = seed

    def fit(self, X, y=None):
        """Fit on a graph given as a WeightedGraph or a symmetric
        nonnegative weight matrix (nonzero entries are edges)."""
        graph = X if isinstance(X, WeightedGraph) else _graph_from_matrix(X)
        opts = SolverOptions(
            max_iterations=self.max_iterations,
            objective_tolerance=self.objective_tolerance,
            feasibility_tolerance=self.feasibility_tolerance,
            seed=self.seed,
        )
        if self.objective == "condition":
            self.report_ = graph_condition(graph, opts)
        elif self.objective == "gap":
            self.report_ = graph_gap(graph, opts)
        else:
            raise ValueError(f"objective must be 'condition' or 'gap', got {self.objective!r}")
        if self.normalization == "trace":
            self.edge_scalings_ = self.report_.trace_matched_scalings
        elif self.normalization == "unit_lower":
            self.edge_scalings_ = self.report_.edge_scalings
        else:
            raise ValueError(
                f"normalization must be 'unit_lower' or 'trace', got {self.normalization!r}"
            )
        self.graph_ = graph.reweighted(graph.weights * self.edge_scalings_)
        return self

    def fit_predict(self, X, y=None):
        """Fit and return the reweighted graph."""
        return self.fit(X).graph_


def _graph_from_matrix(w):
    w = check_array(w, dtype=float)
    n = w.shape[0]
    if w.shape[0] != w.shape[1] or np.abs(w - w.T).max() > 1e-12 * max(1.0, np.abs(w).max()):
        raise ValueError("weight matrix must be square and symmetric")
    edges = [
        (i, j, float(w[i, j])) for i in range(n) for j in range(i + 1, n) if w[i, j] != 0
    ]
    return WeightedGraph(n, tuple(edges))
