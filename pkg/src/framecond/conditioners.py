"""The four scaling optimizers.

Three of them are semidefinite programs over the squared weights u
(operator-norm distance, minimum upper frame bound, spectral gap) and
are solved by the in-package interior-point engine; the fourth is the
Frobenius-distance problem, which is exactly nonnegative least squares
and gets the active-set solver.

Conventions: ``u[i]`` is the squared scale applied to the rank-one term
``f_i f_i^T``.  All four problems are convex in u.
"""

import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._validation import check_weights
from .exceptions import InfeasibleProblemError
from .frames import Frame, SpectralSummary, frame_operator, scaled_frame_operator, summarize
from .nnls import nnls
from .sdp import solve_lmi

__all__ = [
    "SolverOptions",
    "SolverReport",
    "solve_sdp1",
    "solve_sdp2",
    "solve_sdp3",
    "solve_qp4",
    "remark2_rescale",
]


@dataclass(frozen=True)
class SolverOptions:
    max_iterations: int = 10_000
    objective_tolerance: float = 1e-6
    feasibility_tolerance: float = 1e-8
    seed: int = 0

    def __post_init__(self):
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if self.objective_tolerance <= 0 or self.feasibility_tolerance <= 0:
            raise ValueError("tolerances must be positive")


@dataclass(frozen=True)
class SolverReport:
    method: str  # "sdp1" | "sdp2" | "sdp3" | "qp4"
    scaling: Optional[np.ndarray]
    objective: float
    before: SpectralSummary
    after: Optional[SpectralSummary]
    status: str  # "optimal" | "max_iter" | "infeasible"
    iterations: int
    kkt_residual: float

    @property
    def scales(self):
        """Plain (non-squared) scales ``s = sqrt(u)``."""
        return None if self.scaling is None else np.sqrt(self.scaling)


def _rank_one_terms(frame):
    v = frame.vectors
    return np.einsum("ni,mi->inm", v, v)  # (M, N, N), term i is f_i f_i^T


def _block_diag(*mats):
    mats = [np.atleast_2d(m) for m in mats]
    total = sum(m.shape[0] for m in mats)
    out = np.zeros((total, total))
    offset = 0
    for m in mats:
        k = m.shape[0]
        out[offset : offset + k, offset : offset + k] = m
        offset += k
    return out


def _finish(frame, method, u, objective, status, iterations, kkt):
    u = np.clip(u, 0.0, None)
    before = summarize(frame_operator(frame))
    after = summarize(scaled_frame_operator(frame, u)) if np.any(u > 0) else None
    return SolverReport(
        method=method,
        scaling=u,
        objective=float(objective),
        before=before,
        after=after,
        status=status,
        iterations=iterations,
        kkt_residual=float(kkt),
    )


def solve_sdp1(frame, opts=SolverOptions()):
    """Minimize the operator-norm distance ``||I - S_u||_2`` over u >= 0.

    At the optimum the extreme eigenvalues of the scaled operator are
    equidistant from 1, and the optimizer simultaneously minimizes the
    condition number of the scaled frame.
    """
    n, m = frame.dim, frame.count
    p = _rank_one_terms(frame)
    eye = np.eye(n)
    zeros_m = np.zeros((m, m))

    g0 = _block_diag(eye, -eye, zeros_m)
    gs = np.empty((m + 1, 2 * n + m, 2 * n + m))
    for i in range(m):
        e = np.zeros((m, m))
        e[i, i] = 1.0
        gs[i] = _block_diag(-p[i], p[i], e)
    gs[m] = _block_diag(eye, eye, zeros_m)
    c = np.zeros(m + 1)
    c[m] = 1.0

    # Interior start: all-ones weights centered around 1, then a t
    # strictly above the resulting operator-norm distance.
    s_ones = frame_operator(frame)
    w = np.linalg.eigvalsh(s_ones)
    r = 2.0 / (w[0] + w[-1])
    u0 = np.full(m, r)
    d0 = float(np.abs(np.linalg.eigvalsh(r * s_ones - eye)).max())
    x0 = np.concatenate([u0, [1.5 * d0 + 0.1]])

    sol = solve_lmi(c, g0, gs, x0, tol=opts.feasibility_tolerance, max_iterations=opts.max_iterations)
    return _finish(frame, "sdp1", sol.x[:m], sol.objective, sol.status, sol.iterations, sol.kkt_residual)


def solve_sdp2(frame, opts=SolverOptions()):
    """Minimize ``lambda_max(S_u)`` subject to ``S_u >= I`` and u >= 0.

    The optimum value equals the minimal achievable condition number of
    the scaled frame.  Infeasible when the vectors do not span.
    """
    n, m = frame.dim, frame.count
    if not frame.is_frame:
        before = summarize(frame_operator(frame))
        return SolverReport("sdp2", None, float("inf"), before, None, "infeasible", 0, float("inf"))
    p = _rank_one_terms(frame)
    eye = np.eye(n)
    zeros_n = np.zeros((n, n))
    zeros_m = np.zeros((m, m))

    g0 = _block_diag(-eye, zeros_n, zeros_m)
    gs = np.empty((m + 1, 2 * n + m, 2 * n + m))
    for i in range(m):
        e = np.zeros((m, m))
        e[i, i] = 1.0
        gs[i] = _block_diag(p[i], -p[i], e)
    gs[m] = _block_diag(zeros_n, eye, zeros_m)
    c = np.zeros(m + 1)
    c[m] = 1.0

    s_ones = frame_operator(frame)
    w = np.linalg.eigvalsh(s_ones)
    u0 = np.full(m, 1.05 / w[0])
    x0 = np.concatenate([u0, [1.5 * 1.05 * w[-1] / w[0]]])

    sol = solve_lmi(c, g0, gs, x0, tol=opts.feasibility_tolerance, max_iterations=opts.max_iterations)
    return _finish(frame, "sdp2", sol.x[:m], sol.objective, sol.status, sol.iterations, sol.kkt_residual)


def solve_sdp3(frame, opts=SolverOptions()):
    """Minimize the spectral gap of ``S_u`` with the mean eigenvalue
    pinned at 1 (``sum_i u[i] ||f_i||^2 = N``), over u >= 0.

    The trace equality is eliminated by solving for the weight of the
    largest-norm vector, so the engine sees a pure matrix inequality.
    """
    n, m = frame.dim, frame.count
    if not frame.is_frame:
        # The lower spectral bound v > 0 is unattainable for a
        # rank-deficient system, leaving the cone without interior.
        before = summarize(frame_operator(frame))
        return SolverReport("sdp3", None, float("inf"), before, None, "infeasible", 0, float("inf"))
    p = _rank_one_terms(frame)
    sq_norms = np.einsum("ni,ni->i", frame.vectors, frame.vectors)
    piv = int(np.argmax(sq_norms))
    rest = [i for i in range(m) if i != piv]
    eye = np.eye(n)
    zeros_n = np.zeros((n, n))
    zeros_m = np.zeros((m, m))
    one = np.ones((1, 1))
    zero1 = np.zeros((1, 1))

    def e_mm(i):
        e = np.zeros((m, m))
        e[i, i] = 1.0
        return e

    ratio = sq_norms / sq_norms[piv]
    const_s = (n / sq_norms[piv]) * p[piv]
    g0 = _block_diag(-const_s, const_s, (n / sq_norms[piv]) * e_mm(piv), zero1)
    gs = np.empty((m + 1, 2 * n + m + 1, 2 * n + m + 1))
    for j, i in enumerate(rest):
        q = p[i] - ratio[i] * p[piv]
        d = e_mm(i) - ratio[i] * e_mm(piv)
        gs[j] = _block_diag(-q, q, d, zero1)
    gs[m - 1] = _block_diag(eye, zeros_n, zeros_m, zero1)  # t
    gs[m] = _block_diag(zeros_n, -eye, zeros_m, one)  # v
    c = np.zeros(m + 1)
    c[m - 1] = 1.0
    c[m] = -1.0

    u0 = np.full(m, n / sq_norms.sum())
    w0 = np.linalg.eigvalsh(scaled_frame_operator(frame, u0))
    x0 = np.concatenate([u0[rest], [1.5 * w0[-1]], [0.5 * w0[0]]])

    sol = solve_lmi(c, g0, gs, x0, tol=opts.feasibility_tolerance, max_iterations=opts.max_iterations)
    u = np.empty(m)
    u[rest] = sol.x[: m - 1]
    u[piv] = (n - float(u[rest] @ sq_norms[rest])) / sq_norms[piv]
    return _finish(frame, "sdp3", u, sol.objective, sol.status, sol.iterations, sol.kkt_residual)


def solve_qp4(frame, opts=SolverOptions()):
    """Minimize the Frobenius distance ``||I - S_u||_F`` over u >= 0.

    This is exactly ``min ||vec(I) - G u||_2`` with ``G`` holding the
    vectorized rank-one terms, solved by active-set NNLS.  Rank-deficient
    systems are allowed (the minimizer need not be a frame).
    """
    n, m = frame.dim, frame.count
    if not frame.is_frame:
        warnings.warn("input does not span; Frobenius minimizer may not be a frame", stacklevel=2)
    v = frame.vectors
    gram_cols = np.einsum("ni,mi->inm", v, v).reshape(m, n * n).T
    target = np.eye(n).ravel()
    u, rnorm = nnls(gram_cols, target, max_iterations=opts.max_iterations)

    grad = 2.0 * gram_cols.T @ (gram_cols @ u - target)
    on_support = np.abs(grad[u > 0]).max() if np.any(u > 0) else 0.0
    off_support = max(0.0, -grad[u <= 0].min()) if np.any(u <= 0) else 0.0
    kkt = max(on_support, off_support)
    status = "optimal" if kkt <= max(opts.feasibility_tolerance, 1e-10 * n) else "max_iter"
    return _finish(frame, "qp4", u, rnorm, status, 0, kkt)


def remark2_rescale(u, frame, target):
    """Rescale weights between the two canonical normalizations.

    ``target="sdp1_form"`` centers the scaled spectrum around 1
    (``r = 2 / (A + B)``); ``target="sdp2_form"`` pins the smallest
    eigenvalue at 1 (``r = 1 / A``).  Requires a positive definite
    scaled operator; either rescaling preserves the condition number.
    """
    u = check_weights(u, count=frame.count)
    w = np.linalg.eigvalsh(scaled_frame_operator(frame, u))
    a, b = float(w[0]), float(w[-1])
    if a <= 1e-12 * max(1.0, b):
        raise InfeasibleProblemError("scaled frame operator is singular; cannot normalize")
    if target == "sdp1_form":
        r = 2.0 / (a + b)
    elif target == "sdp2_form":
        r = 1.0 / a
    else:
        raise ValueError(f"target must be 'sdp1_form' or 'sdp2_form', got {target!r}")
    return r * u
