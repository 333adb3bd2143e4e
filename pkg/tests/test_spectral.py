import numpy as np
import pytest

from framecond import (
    NotPositiveSemidefiniteError,
    NotSymmetricError,
    distance_to_identity,
    extended_condition_number,
    min_eigengap,
    sym_eig,
)


def test_sym_eig_known_2x2():
    eig = sym_eig(np.array([[2.0, 1.0], [1.0, 2.0]]))
    assert eig.eigenvalues == pytest.approx([1.0, 3.0])
    v = eig.eigenvectors
    assert v.T @ v == pytest.approx(np.eye(2), abs=1e-12)


def test_sym_eig_reconstructs(rng):
    a = rng.standard_normal((6, 6))
    a = a + a.T
    eig = sym_eig(a)
    recon = eig.eigenvectors @ np.diag(eig.eigenvalues) @ eig.eigenvectors.T
    assert recon == pytest.approx(a, abs=1e-10)
    assert np.all(np.diff(eig.eigenvalues) >= 0)


def test_sym_eig_rejects_nonsymmetric():
    with pytest.raises(NotSymmetricError):
        sym_eig(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(NotSymmetricError):
        sym_eig(np.ones((2, 3)))
    with pytest.raises(NotSymmetricError):
        sym_eig(np.array([[np.nan, 0.0], [0.0, 1.0]]))


def test_condition_number_cases():
    assert extended_condition_number(np.diag([1.0, 4.0])) == pytest.approx(4.0)
    assert extended_condition_number(np.diag([0.0, 1.0])) == np.inf
    assert extended_condition_number(np.zeros((3, 3))) == 0.0
    with pytest.raises(NotPositiveSemidefiniteError):
        extended_condition_number(np.diag([-1.0, 1.0]))


def test_condition_number_scale_invariant(rng):
    a = rng.standard_normal((5, 5))
    a = a @ a.T + 0.1 * np.eye(5)
    k = extended_condition_number(a)
    for scale in (1e-6, 1.0, 1e6):
        assert extended_condition_number(scale * a) == pytest.approx(k, rel=1e-9)


def test_distance_to_identity():
    a = np.diag([0.5, 2.0])
    assert distance_to_identity(a, "operator") == pytest.approx(1.0)
    assert distance_to_identity(a, "frobenius") == pytest.approx(np.sqrt(1.25))
    with pytest.raises(ValueError):
        distance_to_identity(a, "nuclear")


def test_min_eigengap():
    assert min_eigengap(np.diag([1.0, 2.0, 4.0])) == pytest.approx(1.0)
    assert min_eigengap(np.diag([2.0, 2.0, 4.0])) == pytest.approx(0.0, abs=1e-12)
    assert min_eigengap(np.array([[3.0]])) == np.inf


def test_weyl_monotonicity_sample(rng):
    for _ in range(25):
        n = int(rng.integers(2, 8))
        a = rng.standard_normal((n, n))
        a = a + a.T
        b = rng.standard_normal((n, n))
        b = b @ b.T  # PSD
        wa = np.linalg.eigvalsh(a)
        wab = np.linalg.eigvalsh(a + b)
        assert np.all(wab >= wa - 1e-10)


def test_eigenvalue_lipschitz_sample(rng):
    for _ in range(25):
        n = int(rng.integers(2, 8))
        a = rng.standard_normal((n, n))
        a = a + a.T
        e = rng.standard_normal((n, n))
        e = e + e.T
        bound = float(np.abs(np.linalg.eigvalsh(e)).max())
        diff = np.abs(np.linalg.eigvalsh(a + e) - np.linalg.eigvalsh(a))
        assert np.all(diff <= bound + 1e-10)
