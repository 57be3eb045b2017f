# coding=utf-8
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from aluthge_lab.polar import PolarParts, polar_decompose, duggal, aluthge_t, \
    aluthge, mean_t, mean, aluthge_iterates, is_aluthge_fixed_point, \
    is_partial_isometry, is_unitary
from aluthge_lab.shift import WeightedShift, shift_matrix


def _random_matrix(rng, n, rank=None):
    rank = n if rank is None else rank
    left = rng.standard_normal((n, rank)) + 1j * rng.standard_normal((n, rank))
    right = rng.standard_normal((rank, n)) + 1j * rng.standard_normal((rank, n))
    return left @ right


def test_polar_decompose_shift():
    """Test the polar decomposition of the shift (1, 2, 1)."""
    t = WeightedShift((1, 2, 1)).to_matrix()
    parts = polar_decompose(t)
    assert isinstance(parts, PolarParts)
    assert np.allclose(parts.p, np.diag([0, 1, 2, 1]), atol=1e-12)
    assert np.allclose(parts.u, shift_matrix((1, 1, 1)), atol=1e-12)
    assert parts.rank == 3
    assert is_partial_isometry(parts.u)
    assert not is_unitary(parts.u)
    assert str(parts) == 'PolarParts: [4x4]'


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=1, max_value=8), st.integers(min_value=0, max_value=10**6))
def test_polar_reconstruction(n, seed):
    """Test the polar reconstruction on random full rank matrices."""
    t = _random_matrix(np.random.default_rng(seed), n)
    parts = polar_decompose(t)
    size = 1 + np.linalg.norm(t)
    assert np.linalg.norm(parts.reconstruct() - t) <= 1e-9 * size
    assert is_partial_isometry(parts.u)
    p = parts.p
    assert np.linalg.norm(p - p.conj().T) <= 1e-9 * size


def test_polar_rank_deficient():
    """Test that ker U = ker T on rank deficient inputs."""
    rng = np.random.default_rng(21)
    for n, rank in ((4, 2), (6, 3), (5, 1)):
        t = _random_matrix(rng, n, rank)
        parts = polar_decompose(t)
        size = 1 + np.linalg.norm(t)
        assert np.linalg.norm(parts.reconstruct() - t) <= 1e-9 * size
        assert parts.rank == rank
        assert is_partial_isometry(parts.u)
        assert not is_unitary(parts.u)
        kernel = np.linalg.svd(t)[2][rank:].conj().T
        assert np.linalg.norm(parts.u @ kernel) <= 1e-8
        u_gram = parts.u.conj().T @ parts.u
        assert np.linalg.matrix_rank(u_gram, tol=1e-6) == rank


def test_polar_unitary_and_zero():
    """Test the polar decomposition of a unitary and of the zero matrix."""
    rng = np.random.default_rng(2)
    q = np.linalg.qr(rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)))[0]
    parts = polar_decompose(q)
    assert np.allclose(parts.p, np.eye(3), atol=1e-10)
    assert is_unitary(parts.u)

    zero = polar_decompose(np.zeros((3, 3)))
    assert np.array_equal(zero.u, np.zeros((3, 3)))
    assert zero.rank == 0


def test_modulus_power():
    """Test the powers of the modulus stored with the decomposition."""
    parts = polar_decompose(WeightedShift((4, 9)).to_matrix())
    assert np.allclose(parts.modulus_power(0.5), np.diag([0, 2, 3]), atol=1e-12)
    assert np.allclose(parts.modulus_power(0.0), np.eye(3), atol=1e-12)
    with pytest.raises(ValueError):
        parts.modulus_power(2)


def test_transform_endpoints():
    """Test that the generalized Aluthge family ends in T and the Duggal transform."""
    rng = np.random.default_rng(9)
    t = _random_matrix(rng, 4)
    assert np.allclose(aluthge_t(t, 0.0), t, atol=1e-9)
    assert np.allclose(aluthge_t(t, 1.0), duggal(t), atol=1e-9)
    assert np.allclose(aluthge(t), aluthge_t(t, 0.5))
    assert np.allclose(mean(t), (t + duggal(t)) / 2, atol=1e-9)
    assert np.allclose(mean_t(t, 0.5), aluthge(t), atol=1e-9)


def test_transforms_of_equal_weights():
    """Test the transforms of the equal weight shift of dimension 4."""
    t = WeightedShift((1, 1, 1)).to_matrix()
    assert np.allclose(duggal(t), shift_matrix((0, 1, 1)), atol=1e-12)
    assert np.allclose(aluthge(t), shift_matrix((0, 1, 1)), atol=1e-12)
    assert np.allclose(mean(t), shift_matrix((0.5, 1, 1)), atol=1e-12)
    assert np.allclose(mean_t(t, 0.25), shift_matrix((0, 1, 1)), atol=1e-12)


def test_transform_parameter_ranges():
    """Test that transform parameters out of range are rejected."""
    t = np.eye(2)
    with pytest.raises(ValueError):
        aluthge_t(t, 1.5)
    with pytest.raises(ValueError):
        aluthge_t(t, -0.1)
    with pytest.raises(ValueError):
        mean_t(t, 0.75)
    with pytest.raises(ValueError):
        duggal(np.ones((2, 3)))


def test_unitary_equivariance():
    """Test that the transforms commute with unitary similarity."""
    rng = np.random.default_rng(4)
    t = _random_matrix(rng, 4)
    q = np.linalg.qr(rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))[0]
    similar = q.conj().T @ t @ q
    for func in (duggal, aluthge, mean):
        assert np.allclose(q.conj().T @ func(t) @ q, func(similar), atol=1e-8)


def test_aluthge_iterates_and_fixed_points():
    """Test the iterated Aluthge map and its fixed points."""
    t = WeightedShift((1, 1, 1)).to_matrix()
    iterates = aluthge_iterates(t, 3)
    assert len(iterates) == 4
    assert np.array_equal(iterates[0], t)
    assert np.allclose(iterates[1], shift_matrix((0, 1, 1)), atol=1e-12)
    assert np.allclose(iterates[3], np.zeros((4, 4)), atol=1e-12)
    assert not is_aluthge_fixed_point(t)

    normal = np.diag([1, 2j, -3])
    assert is_aluthge_fixed_point(normal)


def test_polar_small_singular_values():
    """Test that small but non-zero singular values stay in the modulus."""
    t = np.diag([1.0, 1e-6])
    parts = polar_decompose(t)
    assert parts.rank == 2
    assert np.linalg.norm(parts.reconstruct() - t) <= 1e-9 * (1 + np.linalg.norm(t))
    assert np.allclose(parts.p, t, rtol=0, atol=1e-15)
    assert is_unitary(parts.u)

    shift = WeightedShift((1, 1e-6, 1)).to_matrix()
    parts = polar_decompose(shift)
    assert parts.rank == 3
    assert np.allclose(parts.p, np.diag([0, 1, 1e-6, 1]), rtol=0, atol=1e-15)
    assert np.allclose(parts.u, shift_matrix((1, 1, 1)), atol=1e-12)
    assert np.allclose(duggal(shift), shift_matrix((0, 1, 1e-6)), rtol=0, atol=1e-15)


def test_transforms_of_normal_matrices():
    """Test that every transform of a normal matrix returns the matrix."""
    rng = np.random.default_rng(31)
    q = np.linalg.qr(rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))[0]
    for eigenvalues in ([1, 2j, -3, 0.5 + 0.5j], [0, 1j, 2, -1]):
        normal = q @ np.diag(eigenvalues) @ q.conj().T
        size = 1 + np.linalg.norm(normal)
        assert np.linalg.norm(duggal(normal) - normal) <= 1e-9 * size
        for t in (0.0, 0.3, 0.5, 1.0):
            assert np.linalg.norm(aluthge_t(normal, t) - normal) <= 1e-9 * size
        for t in (0.0, 0.25, 0.5):
            assert np.linalg.norm(mean_t(normal, t) - normal) <= 1e-9 * size
