"""Input validation helpers.

All public entry points funnel array inputs through these checks so the
numerical code below can assume finite, symmetric, well-shaped data.
"""

import numpy as np

from .exceptions import NotSymmetricError

__all__ = ["check_square_symmetric", "check_weights", "spectral_norm"]


def check_square_symmetric(a, name="matrix"):
    """Validate and symmetrize a square matrix.

    Returns ``(a + a.T) / 2`` as a float array.  Raises
    :class:`NotSymmetricError` if the input is not square, has non-finite
    entries, or has an asymmetry larger than roundoff allows.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetricError(f"{name} must be square, got shape {a.shape}")
    if a.shape[0] < 1:
        raise NotSymmetricError(f"{name} must have order >= 1")
    if not np.all(np.isfinite(a)):
        raise NotSymmetricError(f"{name} has non-finite entries")
    scale = max(1.0, float(np.abs(a).max()))
    if np.abs(a - a.T).max() > 1e-8 * scale:
        raise NotSymmetricError(f"{name} is not symmetric")
    return (a + a.T) / 2.0


def check_weights(u, count=None, name="weights"):
    """Validate a vector of nonnegative scaling weights.

    At least one entry must be strictly positive.
    """
    u = np.asarray(u, dtype=float).ravel()
    if count is not None and u.size != count:
        raise ValueError(f"{name} must have length {count}, got {u.size}")
    if not np.all(np.isfinite(u)):
        raise ValueError(f"{name} has non-finite entries")
    if np.any(u < 0):
        raise ValueError(f"{name} must be nonnegative")
    if not np.any(u > 0):
        raise ValueError(f"{name} must have at least one positive entry")
    return u


def spectral_norm(a):
    """Operator (2-)norm of a symmetric matrix via its eigenvalues."""
    return float(np.abs(np.linalg.eigvalsh(a)).max())
