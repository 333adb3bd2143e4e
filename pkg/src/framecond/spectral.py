"""Dense symmetric-matrix spectral primitives.

Everything downstream (frame conditioning, graph reweighting) consumes
spectra through this module, so the contracts here are deliberately
strict: ascending eigenvalues, orthonormal eigenvectors, and a
scale-relative PSD tolerance.
"""

from dataclasses import dataclass

import numpy as np

from ._validation import check_square_symmetric
from .exceptions import NotPositiveSemidefiniteError

__all__ = [
    "EigenDecomposition",
    "sym_eig",
    "default_psd_tol",
    "extended_condition_number",
    "distance_to_identity",
    "min_eigengap",
]


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues in ascending order; column k of ``eigenvectors`` pairs
    with ``eigenvalues[k]``."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def sym_eig(a):
    """Full eigendecomposition of a symmetric matrix.

    Deterministic for a fixed input; eigenvalues ascending, eigenvector
    columns orthonormal.
    """
    a = check_square_symmetric(a)
    w, v = np.linalg.eigh(a)
    return EigenDecomposition(eigenvalues=w, eigenvectors=v)


def default_psd_tol(a):
    """Scale-relative PSD tolerance: ``1e-9 * max(1, ||a||_2)``."""
    a = np.asarray(a, dtype=float)
    return 1e-9 * max(1.0, float(np.abs(np.linalg.eigvalsh(a)).max()))


def extended_condition_number(a, tol=None):
    """Condition number of a PSD matrix, extended to degenerate cases.

    Returns ``lambda_max / lambda_min`` when the matrix is positive
    definite (to tolerance), ``inf`` when it is singular but nonzero,
    and ``0.0`` for the zero matrix.  Raises
    :class:`NotPositiveSemidefiniteError` if an eigenvalue falls below
    ``-tol``.
    """
    a = check_square_symmetric(a)
    if tol is None:
        tol = default_psd_tol(a)
    w = np.linalg.eigvalsh(a)
    lo, hi = float(w[0]), float(w[-1])
    if lo < -tol:
        raise NotPositiveSemidefiniteError(
            f"matrix has eigenvalue {lo:.3e} below -{tol:.3e}"
        )
    if hi <= tol:
        return 0.0
    if lo <= tol:
        return float("inf")
    return hi / lo


def distance_to_identity(a, norm="operator"):
    """``||I - A||`` in the operator or Frobenius norm.

    The operator norm is evaluated spectrally as ``max_k |1 - lambda_k|``.
    """
    a = check_square_symmetric(a)
    if norm == "operator":
        w = np.linalg.eigvalsh(a)
        return float(np.abs(1.0 - w).max())
    if norm == "frobenius":
        return float(np.linalg.norm(np.eye(a.shape[0]) - a, "fro"))
    raise ValueError(f"norm must be 'operator' or 'frobenius', got {norm!r}")


def min_eigengap(a):
    """Minimum pairwise absolute eigenvalue difference.

    Zero exactly when the spectrum is not simple.
    """
    a = check_square_symmetric(a)
    w = np.linalg.eigvalsh(a)
    if w.size < 2:
        return float("inf")
    return float(np.min(np.diff(w)))
