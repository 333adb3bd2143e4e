"""Primal-dual interior-point solver for small dense linear matrix inequalities.

Solves problems of the form

    minimize    c @ x
    subject to  G(x) = g0 + sum_i x[i] * gs[i]  is positive semidefinite,

where the ``gs[i]`` are symmetric matrices (typically block-diagonal
assemblies of spectral constraints and sign constraints).  The method is
the HKM direction with a Mehrotra predictor-corrector, which is robust
and fast for the problem sizes this package targets (cone order a few
tens, a few dozen variables).

Duality used throughout: the Lagrangian dual is

    maximize    -<g0, X>
    subject to  <gs[i], X> = c[i],   X >= 0  (PSD),

and the duality gap is exactly ``<X, Z>`` with ``Z = G(x)``.
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import SolverError

__all__ = ["LMISolution", "solve_lmi"]


@dataclass(frozen=True)
class LMISolution:
    x: np.ndarray
    objective: float
    status: str  # "optimal" | "max_iter"
    iterations: int
    gap: float
    primal_residual: float
    dual_residual: float

    @property
    def kkt_residual(self):
        return max(self.gap, self.primal_residual, self.dual_residual)


def _max_step(chol, direction):
    """Largest alpha with ``S + alpha * direction`` PSD, for ``S = chol @ chol.T``."""
    w = np.linalg.solve(chol, direction)
    w = np.linalg.solve(chol, w.T).T
    lam = np.linalg.eigvalsh((w + w.T) / 2.0)[0]
    if lam >= -1e-14:
        return np.inf
    return -1.0 / lam


def solve_lmi(c, g0, gs, x0, tol=1e-8, max_iterations=200):
    """Minimize ``c @ x`` subject to ``g0 + sum x[i] gs[i] >= 0``.

    Parameters
    ----------
    c : (n,) array
    g0 : (k, k) symmetric array
    gs : (n, k, k) array of symmetric matrices
    x0 : (n,) array
        Strictly feasible starting point (``G(x0)`` positive definite).
        All problems in this package admit a cheap analytic interior
        point, so no infeasible-start machinery for the dual side is
        needed.
    tol : float
        Relative tolerance on duality gap and residual norms.
    max_iterations : int

    Returns
    -------
    LMISolution
    """
    c = np.asarray(c, dtype=float)
    g0 = np.asarray(g0, dtype=float)
    gs = np.asarray(gs, dtype=float)
    n = c.size
    k = g0.shape[0]

    x = np.asarray(x0, dtype=float).copy()
    z = g0 + np.tensordot(x, gs, axes=1)
    z = (z + z.T) / 2.0
    try:
        np.linalg.cholesky(z)
    except np.linalg.LinAlgError:
        raise SolverError("starting point is not strictly feasible")

    # Primal initialization: identity scaled to the data magnitude.
    scale = max(1.0, float(np.abs(c).max()), float(np.abs(z).max()))
    X = np.eye(k) * scale

    c_norm = 1.0 + float(np.linalg.norm(c))
    g0_norm = 1.0 + float(np.linalg.norm(g0, "fro"))
    eta = 0.98  # fraction-to-boundary

    status = "max_iter"
    it = 0
    gap_rel = prim_rel = dual_rel = np.inf
    for it in range(1, int(max_iterations) + 1):
        z = (z + z.T) / 2.0
        X = (X + X.T) / 2.0
        gx = g0 + np.tensordot(x, gs, axes=1)
        rd = gx - z  # dual-side drift, ~0 by construction
        rp = c - np.tensordot(gs, X, axes=([1, 2], [0, 1]))
        gap = float(np.vdot(X, z))
        mu = gap / k
        obj = float(c @ x)

        gap_rel = abs(gap) / (1.0 + abs(obj))
        prim_rel = float(np.linalg.norm(rp)) / c_norm
        dual_rel = float(np.linalg.norm(rd, "fro")) / g0_norm
        if gap_rel <= tol and prim_rel <= tol and dual_rel <= tol:
            status = "optimal"
            break

        try:
            lz = np.linalg.cholesky(z)
            lx = np.linalg.cholesky(X)
        except np.linalg.LinAlgError:
            # Roundoff pushed an iterate to the cone boundary; stop and
            # report the best point reached.
            break
        zinv = np.linalg.inv(lz.T) @ np.linalg.inv(lz)

        # Schur complement M[i, j] = tr(gs[i] X gs[j] zinv).
        xg = X @ gs  # stack of X gs[i], reused in rhs terms
        t_mats = zinv @ xg.transpose(0, 2, 1)  # zinv gs[i] X (gs symmetric)
        m_mat = np.tensordot(t_mats, gs, axes=([1, 2], [1, 2]))

        a_vec = np.tensordot(gs, zinv, axes=([1, 2], [0, 1]))
        # r_vec[i] = tr(gs[i] X rd zinv); gs[i] X = (X gs[i]).T for symmetric gs[i].
        r_vec = np.tensordot(xg.transpose(0, 2, 1), (rd @ zinv).T, axes=([1, 2], [0, 1]))

        def direction(sigma_mu, corr):
            rhs = sigma_mu * a_vec - r_vec - c
            if corr is not None:
                rhs = rhs - np.tensordot(gs, corr @ zinv, axes=([1, 2], [0, 1]))
            try:
                dx = np.linalg.solve(m_mat, rhs)
            except np.linalg.LinAlgError:
                # Near the optimum the Schur complement can become
                # numerically singular; the minimum-norm direction keeps
                # the iteration going.
                dx, *_ = np.linalg.lstsq(m_mat, rhs, rcond=None)
            dz = np.tensordot(dx, gs, axes=1) + rd
            dX = sigma_mu * zinv - X - X @ dz @ zinv
            if corr is not None:
                dX = dX - corr @ zinv
            dX = (dX + dX.T) / 2.0
            return dx, dX, (dz + dz.T) / 2.0

        # Predictor (affine scaling).
        dx_a, dX_a, dz_a = direction(0.0, None)
        ap = min(1.0, eta * _max_step(lx, dX_a))
        ad = min(1.0, eta * _max_step(lz, dz_a))
        mu_aff = float(np.vdot(X + ap * dX_a, z + ad * dz_a)) / k
        sigma = min(1.0, max(0.0, (mu_aff / mu)) ** 3)

        # Corrector.
        dx, dX, dz = direction(sigma * mu, dX_a @ dz_a)
        ap = min(1.0, eta * _max_step(lx, dX))
        ad = min(1.0, eta * _max_step(lz, dz))

        X = X + ap * dX
        x = x + ad * dx
        z = z + ad * dz

    return LMISolution(
        x=x,
        objective=float(c @ x),
        status=status,
        iterations=it,
        gap=gap_rel,
        primal_residual=prim_rel,
        dual_residual=dual_rel,
    )
