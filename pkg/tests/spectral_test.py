# coding=utf-8
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from aluthge_lab.spectral import HermitianEig, hermitian_part, hermitian_eig, \
    psd_spectrum, power_values, inverse_values, psd_power, pseudoinverse_psd


def _random_hermitian(rng, n):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (z + z.conj().T) / 2


def _random_psd(rng, n, rank=None):
    rank = n if rank is None else rank
    z = rng.standard_normal((n, rank)) + 1j * rng.standard_normal((n, rank))
    return z @ z.conj().T


def test_hermitian_eig_diagonal():
    """Test the eigensolver on a diagonal matrix."""
    eig = hermitian_eig(np.diag([3.0, -1.0, 2.0]))
    assert isinstance(eig, HermitianEig)
    assert eig.size == 3
    assert np.allclose(eig.eigenvalues, [-1.0, 2.0, 3.0])
    assert str(eig).startswith('HermitianEig')


def test_hermitian_eig_complex():
    """Test the eigensolver on a small complex Hermitian matrix."""
    a = np.array([[2, 1j], [-1j, 2]])
    eig = hermitian_eig(a)
    assert np.allclose(eig.eigenvalues, [1.0, 3.0], atol=1e-12)
    vecs = eig.eigenvectors
    assert np.allclose(vecs.conj().T @ vecs, np.eye(2), atol=1e-12)
    assert np.allclose(eig.reconstruct(), a, atol=1e-12)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=12), st.integers(min_value=0, max_value=10**6))
def test_hermitian_eig_reconstruction(n, seed):
    """Test eigendecomposition reconstruction on random Hermitian matrices."""
    a = _random_hermitian(np.random.default_rng(seed), n)
    eig = hermitian_eig(a)
    error = np.linalg.norm(eig.reconstruct() - a) / (1 + np.linalg.norm(a))
    assert error <= 1e-10
    assert np.all(np.diff(eig.eigenvalues) >= 0)
    orth = eig.eigenvectors.conj().T @ eig.eigenvectors
    assert np.linalg.norm(orth - np.eye(n)) <= 1e-10
    assert np.allclose(eig.eigenvalues, np.linalg.eigvalsh(a), atol=1e-9)


def test_hermitian_eig_repeated_eigenvalues():
    """Test the eigensolver with a repeated eigenvalue."""
    rng = np.random.default_rng(7)
    q = np.linalg.qr(rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))[0]
    a = q @ np.diag([1.0, 1.0, 1.0, 5.0]) @ q.conj().T
    eig = hermitian_eig(a)
    assert np.allclose(eig.eigenvalues, [1, 1, 1, 5], atol=1e-10)


def test_hermitian_checks():
    """Test that non-Hermitian input is rejected."""
    with pytest.raises(ValueError):
        hermitian_part([[0, 1], [0, 0]])
    with pytest.raises(ValueError):
        hermitian_eig([[1, 2, 3]])
    part = hermitian_part([[1, 1 + 1e-14], [1, 1]])
    assert np.allclose(part, part.conj().T)


def test_psd_spectrum():
    """Test the cleanup of PSD eigenvalues."""
    eig, values = psd_spectrum(np.diag([4.0, 1e-14, -1e-12]))
    assert values.tolist() == [0.0, 0.0, 4.0]
    with pytest.raises(ValueError):
        psd_spectrum(np.diag([1.0, -0.5]))


def test_power_and_inverse_values():
    """Test the scalar spectral functions and their zero conventions."""
    values = np.array([0.0, 4.0])
    assert power_values(values, 0.5).tolist() == [0.0, 2.0]
    assert power_values(values, 0.0).tolist() == [1.0, 1.0]
    assert inverse_values(values).tolist() == [0.0, 0.25]


def test_psd_power():
    """Test fractional powers of positive semidefinite matrices."""
    rng = np.random.default_rng(3)
    p = _random_psd(rng, 5)
    root = psd_power(p, 0.5)
    assert np.linalg.norm(root @ root - p) <= 1e-9 * (1 + np.linalg.norm(p))
    assert np.allclose(psd_power(p, 0.0), np.eye(5))
    assert np.allclose(psd_power(p, 1.0), p, atol=1e-9)
    with pytest.raises(ValueError):
        psd_power(p, 1.5)
    with pytest.raises(ValueError):
        psd_power(-p, 0.5)


def test_psd_power_rank_deficient():
    """Test that powers of a singular matrix keep its kernel."""
    rng = np.random.default_rng(11)
    p = _random_psd(rng, 5, rank=2)
    for t in (0.25, 0.5, 1.0):
        power = psd_power(p, t)
        kernel = np.linalg.svd(p)[2][2:].conj().T  # columns spanning ker P
        assert np.linalg.norm(power @ kernel) <= 1e-8


def test_pseudoinverse_psd():
    """Test the Moore-Penrose conditions of the spectral pseudoinverse."""
    rng = np.random.default_rng(5)
    p = _random_psd(rng, 6, rank=3)
    pinv = pseudoinverse_psd(p)
    size = 1 + np.linalg.norm(p)
    assert np.linalg.norm(p @ pinv @ p - p) <= 1e-8 * size
    assert np.linalg.norm(pinv @ p @ pinv - pinv) <= 1e-8 * (1 + np.linalg.norm(pinv))
    product = p @ pinv
    assert np.linalg.norm(product - product.conj().T) <= 1e-8


def test_psd_power_small_eigenvalues():
    """Test that small but genuine eigenvalues keep their powers."""
    root = psd_power(np.diag([1.0, 1e-11]), 0.5)
    assert np.allclose(root, np.diag([1.0, np.sqrt(1e-11)]), rtol=1e-9, atol=0)
    assert np.array_equal(psd_power(np.diag([1.0, -1e-12]), 0.5), np.diag([1.0, 0.0]))
