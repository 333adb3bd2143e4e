"""Lawson-Hanson active-set solver for nonnegative least squares.

Solves ``argmin_x ||A x - b||_2`` subject to ``x >= 0``.  The active-set
method terminates in finitely many steps and satisfies the KKT
conditions exactly on the final passive set, which is what the
Frobenius-distance scaling problem needs.
"""

import numpy as np

__all__ = ["nnls"]


def nnls(a, b, max_iterations=None, tol=None):
    """Nonnegative least squares by the Lawson-Hanson active-set method.

    Parameters
    ----------
    a : (m, n) array
    b : (m,) array
    max_iterations : int, optional
        Cap on outer iterations; defaults to ``10 * n``.
    tol : float, optional
        Dual-feasibility threshold on the negative gradient; defaults
        to a scale-relative machine tolerance.

    Returns
    -------
    x : (n,) array
        Solution with ``x >= 0``.
    rnorm : float
        Residual norm ``||A x - b||_2``.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float).ravel()
    m, n = a.shape
    if b.size != m:
        raise ValueError("incompatible shapes for A and b")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise ValueError("non-finite input")
    if max_iterations is None:
        max_iterations = 10 * n
    if tol is None:
        tol = 10 * max(m, n) * np.finfo(float).eps * max(1.0, np.abs(a).max()) * max(
            1.0, np.abs(b).max()
        )

    x = np.zeros(n)
    passive = np.zeros(n, dtype=bool)
    w = a.T @ b  # negative gradient at x = 0

    for _ in range(int(max_iterations)):
        candidates = ~passive & (w > tol)
        if not candidates.any():
            break
        j = int(np.argmax(np.where(candidates, w, -np.inf)))
        passive[j] = True

        # Inner loop: restrict to the passive set, back off along the
        # segment to the previous iterate until feasibility holds.
        while True:
            cols = np.flatnonzero(passive)
            s = np.zeros(n)
            s[cols], *_ = np.linalg.lstsq(a[:, cols], b, rcond=None)
            if np.all(s[cols] > 0):
                x = s
                break
            neg = cols[s[cols] <= 0]
            alpha = np.min(x[neg] / (x[neg] - s[neg]))
            x = x + alpha * (s - x)
            drop = passive & (x <= 1e-12)
            x[drop] = 0.0
            passive[drop] = False
            if not passive.any():
                x = np.zeros(n)
                break

        w = a.T @ (b - a @ x)

    residual = b - a @ x
    return x, float(np.linalg.norm(residual))
