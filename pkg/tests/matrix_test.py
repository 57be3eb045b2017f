# coding=utf-8
import os

import numpy as np
import pytest

from aluthge_lab.matrix import ComplexMatrix, as_matrix, as_square_matrix, matmul, \
    adjoint, transpose, conj, commutator, frobenius_norm, direct_sum, identity, \
    exchange, scale


def test_complex_matrix_init():
    """Test the initialization of ComplexMatrix and its basic properties."""
    mat = ComplexMatrix([[0, 1], [2j, 0]])
    assert mat.rows == 2
    assert mat.cols == 2
    assert mat.is_square
    assert mat.values.dtype == np.complex128
    assert mat.values[1, 0] == 2j
    with pytest.raises(ValueError):
        mat.values[0, 0] = 5
    assert str(mat) == 'ComplexMatrix: [2x2]'

    rect = ComplexMatrix(np.ones((2, 3)))
    assert not rect.is_square


def test_complex_matrix_invalid():
    """Test that invalid matrices are rejected."""
    with pytest.raises(ValueError):
        ComplexMatrix([1, 2, 3])
    with pytest.raises(ValueError):
        ComplexMatrix([[1, np.nan], [0, 1]])
    with pytest.raises(ValueError):
        ComplexMatrix([[1, np.inf], [0, 1]])


def test_complex_matrix_dict_methods():
    """Test the to_dict and from_dict methods."""
    mat = ComplexMatrix([[1 + 2j, 0], [0, -3]])
    mat_dict = mat.to_dict()
    assert mat_dict['type'] == 'ComplexMatrix'
    assert mat_dict['rows'] == 2
    assert mat_dict['data'][0] == [1.0, 2.0]
    assert mat_dict['data'][3] == [-3.0, 0.0]
    new_mat = ComplexMatrix.from_dict(mat_dict)
    assert new_mat == mat
    assert hash(new_mat) == hash(mat)


def test_complex_matrix_from_dict_invalid():
    """Test that malformed matrix dictionaries are rejected."""
    base = {'type': 'ComplexMatrix', 'rows': 2, 'cols': 2,
            'data': [[0, 0], [1, 0], [0, 0]]}
    with pytest.raises(ValueError):
        ComplexMatrix.from_dict(base)
    base['data'] = [[0, 0], [1, 0], [0, 0], [0]]
    with pytest.raises(ValueError):
        ComplexMatrix.from_dict(base)
    base['data'] = [[0, 0], [1, 0], [0, 0], [float('nan'), 0]]
    with pytest.raises(ValueError):
        ComplexMatrix.from_dict(base)
    with pytest.raises(AssertionError):
        ComplexMatrix.from_dict({'type': 'WeightedShift'})


def test_complex_matrix_files():
    """Test reading and writing matrix files."""
    zero = ComplexMatrix.from_file('./tests/assets/zero4.json')
    assert zero.rows == zero.cols == 4
    assert frobenius_norm(zero) == 0

    out_file = './tests/assets/matrix_test.json'
    mat = ComplexMatrix([[1, 1j], [0, 2]])
    assert mat.to_file(out_file) == out_file
    assert ComplexMatrix.from_file(out_file) == mat
    os.remove(out_file)


def test_complex_matrix_duplicate():
    """Test the duplicate method."""
    mat = ComplexMatrix([[1, 2], [3, 4]])
    dup = mat.duplicate()
    assert dup == mat
    assert dup is not mat
    assert mat != ComplexMatrix([[1, 2], [3, 5]])


def test_as_matrix():
    """Test the conversion of array-likes into complex matrices."""
    array = as_matrix([[1, 2], [3, 4]])
    assert array.dtype == np.complex128
    assert array.shape == (2, 2)
    assert as_matrix(ComplexMatrix([[1]])).shape == (1, 1)
    with pytest.raises(ValueError):
        as_matrix(np.zeros((2, 2, 2)))
    with pytest.raises(ValueError):
        as_square_matrix([[1, 2, 3]])


def test_arithmetic():
    """Test the basic arithmetic helpers."""
    a = np.array([[1, 1j], [0, 2]])
    b = np.array([[0, 1], [1, 0]])
    assert np.array_equal(matmul(a, b), a @ b)
    with pytest.raises(ValueError):
        matmul(np.ones((2, 3)), np.ones((2, 3)))
    assert np.array_equal(adjoint(a), np.array([[1, 0], [-1j, 2]]))
    assert np.array_equal(transpose(a), np.array([[1, 0], [1j, 2]]))
    assert np.array_equal(conj(a), np.array([[1, -1j], [0, 2]]))
    assert np.array_equal(commutator(a, a), np.zeros((2, 2)))
    with pytest.raises(ValueError):
        commutator(np.eye(2), np.eye(3))


def test_norms_and_builders():
    """Test the Frobenius norm, direct sums and special matrices."""
    assert frobenius_norm([[3, 4j]]) == pytest.approx(5.0)
    assert scale([[3, 4]]) == pytest.approx(6.0)
    block = direct_sum(np.zeros((1, 1)), [[1, 2], [3, 4]])
    assert block.shape == (3, 3)
    assert block[2, 2] == 4
    assert block[0, 1] == 0
    assert np.array_equal(direct_sum(np.zeros((0, 0)), [[5]]), np.array([[5]]))
    assert np.array_equal(identity(3), np.eye(3))
    flip = exchange(3)
    assert np.array_equal(flip @ flip, np.eye(3))
    assert flip[0, 2] == 1 and flip[1, 1] == 1 and flip[2, 0] == 1
