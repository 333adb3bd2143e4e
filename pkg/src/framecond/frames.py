"""Frame model, frame operators, scalability testing, and the
perturbation-based rescaling that provably lowers the condition number.
"""

from dataclasses import dataclass, field

import numpy as np

from ._validation import check_square_symmetric, check_weights
from .exceptions import DegenerateSpectrumError, NotAFrameError, NotPositiveSemidefiniteError
from .spectral import default_psd_tol, min_eigengap, sym_eig

__all__ = [
    "Frame",
    "SpectralSummary",
    "EpsilonTightReport",
    "frame_operator",
    "scaled_frame_operator",
    "summarize",
    "is_scalable",
    "epsilon_tight_diagnostics",
    "find_perturbation_candidate",
    "perturbation_rescale",
]


@dataclass(frozen=True)
class Frame:
    """A system of M column vectors spanning (or attempting to span) R^N.

    ``vectors`` is the N x M matrix whose i-th column is the i-th frame
    vector.  Construction validates that no column is zero and that
    M >= N; whether the system actually spans R^N is recorded in
    ``is_frame`` (solvers that need a genuine frame check that flag).
    """

    vectors: np.ndarray
    is_frame: bool = field(init=False)

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=float)
        if v.ndim != 2:
            raise NotAFrameError(f"vectors must be a 2-D array, got shape {v.shape}")
        n, m = v.shape
        if n < 1:
            raise NotAFrameError("dimension must be >= 1")
        if m < n:
            raise NotAFrameError(f"need at least {n} vectors in R^{n}, got {m}")
        if not np.all(np.isfinite(v)):
            raise NotAFrameError("vectors have non-finite entries")
        norms = np.linalg.norm(v, axis=0)
        if np.any(norms == 0):
            bad = int(np.argmin(norms))
            raise NotAFrameError(f"column {bad} is the zero vector")
        object.__setattr__(self, "vectors", v)
        w = np.linalg.eigvalsh(v @ v.T)
        object.__setattr__(self, "is_frame", bool(w[0] > 1e-9 * w[-1]))

    @property
    def dim(self):
        return self.vectors.shape[0]

    @property
    def count(self):
        return self.vectors.shape[1]


@dataclass(frozen=True)
class SpectralSummary:
    """Frame-operator statistics: optimal frame bounds, condition number,
    spectral gaps, and distances to the identity."""

    lambda_min: float
    lambda_max: float
    condition_number: float
    gap: float
    relative_gap: float
    frobenius_dist: float
    opnorm_dist: float
    trace: float


def frame_operator(frame):
    """The N x N operator ``S = F F^T``."""
    v = frame.vectors
    s = v @ v.T
    return (s + s.T) / 2.0


def scaled_frame_operator(frame, u):
    """``sum_i u[i] f_i f_i^T`` for nonnegative squared weights ``u``."""
    u = check_weights(u, count=frame.count)
    v = frame.vectors
    s = (v * u) @ v.T
    return (s + s.T) / 2.0


def summarize(s, tol=None):
    """Aggregate the spectral statistics of a PSD operator.

    Raises :class:`NotPositiveSemidefiniteError` when an eigenvalue
    falls below the (scale-relative) tolerance.
    """
    s = check_square_symmetric(s)
    if tol is None:
        tol = default_psd_tol(s)
    w = np.linalg.eigvalsh(s)
    lo, hi = float(w[0]), float(w[-1])
    if lo < -tol:
        raise NotPositiveSemidefiniteError(f"eigenvalue {lo:.3e} below -{tol:.3e}")
    trace = float(w.sum())
    n = s.shape[0]
    if hi <= tol:
        kappa = 0.0
    elif lo <= tol:
        kappa = float("inf")
    else:
        kappa = hi / lo
    mean = trace / n
    return SpectralSummary(
        lambda_min=lo,
        lambda_max=hi,
        condition_number=kappa,
        gap=hi - lo,
        relative_gap=(hi - lo) / mean if mean > 0 else 0.0,
        frobenius_dist=float(np.linalg.norm(np.eye(n) - s, "fro")),
        opnorm_dist=float(np.abs(1.0 - w).max()),
        trace=trace,
    )


def is_scalable(frame, tol=1e-6):
    """Whether some nonnegative rescaling makes the frame Parseval.

    Runs the Frobenius-distance minimization (an exact NNLS solve) and
    accepts when the optimal distance is at most ``tol``.  Returns
    ``(True, weights)`` or ``(False, None)``.
    """
    from .conditioners import solve_qp4

    report = solve_qp4(frame)
    if report.objective <= tol:
        return True, report.scaling
    return False, None


@dataclass(frozen=True)
class EpsilonTightReport:
    """Closed-form conditioning bounds for a unit-norm nearly tight frame,
    alongside the measured quantities they predict."""

    epsilon: float
    kappa_formula: float
    gap_formula: float
    frobenius_bound: float
    kappa_measured: float
    gap_measured: float
    frobenius_measured: float


def epsilon_tight_diagnostics(frame, norm_tol=1e-8):
    """Diagnostics for unit-norm frames whose operator spectrum lies in
    ``[1 - eps, 1 + eps]``.

    Requires every frame vector to have unit norm.  With
    ``eps = max(1 - lambda_min, lambda_max - 1)`` the closed forms are
    ``kappa = 1 + 2 eps / (1 - eps)``, ``gap = 2 eps``, and a Frobenius
    bound of ``eps * sqrt(N)``.  When the spectrum is symmetric about 1
    the measured condition number and gap must match the formulas, and
    that consistency is asserted here.
    """
    norms = np.linalg.norm(frame.vectors, axis=0)
    if np.abs(norms - 1.0).max() > norm_tol:
        bad = int(np.argmax(np.abs(norms - 1.0)))
        raise ValueError(f"frame vector {bad} is not unit-norm (|f| = {norms[bad]:.6g})")
    stats = summarize(frame_operator(frame))
    eps = max(1.0 - stats.lambda_min, stats.lambda_max - 1.0)
    eps = max(eps, 0.0)
    kappa_formula = 1.0 + 2.0 * eps / (1.0 - eps) if eps < 1.0 else float("inf")
    gap_formula = 2.0 * eps
    if abs((stats.lambda_max - 1.0) - (1.0 - stats.lambda_min)) <= 1e-9:
        # Symmetric spectrum: the closed forms are exact, not just bounds.
        assert abs(stats.condition_number - kappa_formula) <= 1e-9 * max(1.0, kappa_formula)
        assert abs(stats.gap - gap_formula) <= 1e-9
    return EpsilonTightReport(
        epsilon=eps,
        kappa_formula=kappa_formula,
        gap_formula=gap_formula,
        frobenius_bound=eps * np.sqrt(frame.dim),
        kappa_measured=stats.condition_number,
        gap_measured=stats.gap,
        frobenius_measured=stats.frobenius_dist,
    )


def find_perturbation_candidate(frame, tol=1e-8):
    """Index of a frame vector orthogonal to the top eigenvector of the
    frame operator but not to the bottom one, or ``None``.

    Requires a simple spectrum (positive minimum eigengap); raises
    :class:`DegenerateSpectrumError` otherwise.
    """
    s = frame_operator(frame)
    if min_eigengap(s) <= tol:
        raise DegenerateSpectrumError("frame operator spectrum is not simple")
    eig = sym_eig(s)
    v_min = eig.eigenvectors[:, 0]
    v_max = eig.eigenvectors[:, -1]
    norms = np.linalg.norm(frame.vectors, axis=0)
    top = np.abs(frame.vectors.T @ v_max)
    bottom = np.abs(frame.vectors.T @ v_min)
    for k in range(frame.count):
        if top[k] <= tol * norms[k] and bottom[k] > tol * norms[k]:
            return k
    return None


def perturbation_rescale(frame, k, gamma, tol=1e-8):
    """Squared weights of the single-vector perturbation rescaling.

    Boosts vector ``k`` (which must satisfy the orthogonality conditions
    of :func:`find_perturbation_candidate`) by ``sqrt(1 + gamma)`` and
    renormalizes all scales by a common factor so that the plain scales
    still sum to the vector count ``m``.  Admissible range:
    ``0 < gamma < eigengap / ||f_k||^2``.  The result strictly lowers
    the condition number of the scaled frame operator.
    """
    s = frame_operator(frame)
    delta = min_eigengap(s)
    if delta <= tol:
        raise DegenerateSpectrumError("frame operator spectrum is not simple")
    fk = frame.vectors[:, k]
    hi = delta / float(fk @ fk)
    if not 0.0 < gamma < hi:
        raise ValueError(f"gamma must lie in (0, {hi:.6g}), got {gamma}")
    eig = sym_eig(s)
    nk = np.linalg.norm(fk)
    if abs(fk @ eig.eigenvectors[:, -1]) > tol * nk or abs(fk @ eig.eigenvectors[:, 0]) <= tol * nk:
        raise ValueError(f"vector {k} does not satisfy the orthogonality hypotheses")
    m = frame.count
    root = np.sqrt(1.0 + gamma)
    factor = m / (m - 1.0 + root)
    scales = np.full(m, factor)
    scales[k] = factor * root
    return scales**2
