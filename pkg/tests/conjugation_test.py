# coding=utf-8
import numpy as np
import pytest

from aluthge_lab.conjugation import AntilinearMap, entrywise_conjugation, \
    compose_antilinear, compose_with_linear, support_projection, is_conjugation, \
    is_partial_conjugation, check_cs_with, partial_conjugation_from_polar, \
    extend_partial_conjugation
from aluthge_lab.polar import polar_decompose, duggal
from aluthge_lab.shift import WeightedShift, shift_matrix, flip_conjugation

PARTIAL_J = np.array([[0, 0, 0, 0],
                      [0, 0, 0, 1],
                      [0, 0, 1, 0],
                      [0, 1, 0, 0]])


def test_antilinear_map_init():
    """Test the initialization of AntilinearMap."""
    amap = AntilinearMap([[0, 1j], [1j, 0]])
    assert amap.size == 2
    assert np.allclose(amap.apply([1j, 2]), [2j, 1])
    assert np.allclose(amap.apply(2j * np.array([1j, 2])), -2j * amap.apply([1j, 2]))
    assert str(amap) == 'AntilinearMap: [2x2]'
    with pytest.raises(ValueError):
        AntilinearMap([[1, 2, 3]])
    with pytest.raises(ValueError):
        amap.apply([1, 2, 3])


def test_antilinear_map_dict_methods():
    """Test the to_dict and from_dict methods."""
    amap = AntilinearMap([[0, 1j], [1j, 0]])
    new_amap = AntilinearMap.from_dict(amap.to_dict())
    assert new_amap == amap
    assert new_amap.duplicate() == amap


def test_compose_antilinear():
    """Test that two antilinear maps compose to a linear map."""
    flip = flip_conjugation(4)
    assert np.array_equal(compose_antilinear(flip, flip), np.eye(4))
    partial = AntilinearMap(PARTIAL_J)
    assert np.array_equal(compose_antilinear(flip, partial), shift_matrix((1, 1, 1)))
    extended = AntilinearMap(PARTIAL_J + np.diag([1, 0, 0, 0]))
    cyclic = np.roll(np.eye(4), 1, axis=1)
    assert np.array_equal(compose_antilinear(flip, extended), cyclic)
    with pytest.raises(ValueError):
        compose_antilinear(flip, flip_conjugation(3))


def test_compose_with_linear():
    """Test the composition of an antilinear map with a linear map."""
    rng = np.random.default_rng(1)
    amap = AntilinearMap(rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)))
    lin = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    x = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    assert np.allclose(compose_with_linear(amap, lin).apply(x), amap.apply(lin @ x))


def test_is_conjugation():
    """Test the conjugation predicate."""
    assert is_conjugation(flip_conjugation(5))
    assert is_conjugation(entrywise_conjugation(3))
    assert is_conjugation(AntilinearMap(np.diag([1, 1j])))
    assert not is_conjugation(AntilinearMap(PARTIAL_J))
    assert not is_conjugation(AntilinearMap([[0, 1], [-1, 0]]))
    assert not is_conjugation(AntilinearMap(2 * np.eye(2)))


def test_is_partial_conjugation():
    """Test the partial conjugation predicate."""
    partial = AntilinearMap(PARTIAL_J)
    assert is_partial_conjugation(partial)
    assert np.array_equal(support_projection(partial), np.diag([0, 1, 1, 1]))
    assert is_partial_conjugation(flip_conjugation(3))
    assert not is_partial_conjugation(AntilinearMap([[0, 1], [0, 0]]))
    assert not is_partial_conjugation(AntilinearMap(2 * np.eye(2)))


def test_check_cs_with():
    """Test the residual of an operator against a conjugation."""
    t = WeightedShift((1, 2, 1)).to_matrix()
    flip = flip_conjugation(4)
    assert check_cs_with(t, flip) <= 1e-12
    assert check_cs_with(duggal(t), flip) >= 0.5
    assert check_cs_with(np.diag([1.0, -2.0, 3.0]), entrywise_conjugation(3)) == 0
    with pytest.raises(ValueError):
        check_cs_with(t, AntilinearMap(PARTIAL_J))
    with pytest.raises(ValueError):
        check_cs_with(t, flip_conjugation(3))


def test_check_cs_with_antilinear_form():
    """Test that the residual matches ||T - C·T^*·C|| computed on vectors."""
    rng = np.random.default_rng(8)
    t = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    flip = flip_conjugation(3)
    residual = check_cs_with(t, flip)
    cols = [t[:, k] - flip.apply(t.conj().T @ flip.apply(np.eye(3)[:, k]))
            for k in range(3)]
    assert residual == pytest.approx(np.linalg.norm(np.array(cols)), rel=1e-10)


def test_partial_conjugation_from_polar():
    """Test the partial conjugation built from the polar factor of a CS shift."""
    t = WeightedShift((1, 2, 1)).to_matrix()
    flip = flip_conjugation(4)
    parts = polar_decompose(t)
    partial = partial_conjugation_from_polar(flip, parts.u)
    assert np.allclose(partial.matrix, PARTIAL_J, atol=1e-12)
    assert is_partial_conjugation(partial)
    assert not is_conjugation(partial)
    assert np.allclose(compose_antilinear(flip, partial), parts.u, atol=1e-12)

    extended = extend_partial_conjugation(partial)
    assert is_conjugation(extended)
    assert np.allclose(extended.matrix, PARTIAL_J + np.diag([1, 0, 0, 0]), atol=1e-12)
    distance = np.linalg.norm(parts.p @ compose_antilinear(flip, extended) - duggal(t))
    assert distance == pytest.approx(1.0, abs=1e-12)


def test_extend_partial_conjugation_invalid():
    """Test that maps which are not partial conjugations cannot be extended."""
    with pytest.raises(ValueError):
        extend_partial_conjugation(AntilinearMap([[0, 1], [0, 0]]))
    full = extend_partial_conjugation(flip_conjugation(3))
    assert np.allclose(full.matrix, flip_conjugation(3).matrix)
