# coding=utf-8
"""Dense complex matrix carrier and the arithmetic everything else is built on.

All functions accept array-likes (nested lists, numpy arrays or ComplexMatrix
objects) and return two-dimensional complex128 numpy arrays.
"""
from __future__ import division

import json
import os

import numpy as np


class ComplexMatrix(object):
    """A validated dense complex matrix that can be written to and read from files.

    Args:
        values: A two-dimensional array-like of complex numbers. Nested lists,
            numpy arrays and other ComplexMatrix objects are all accepted.
            Every entry must be finite.

    Properties:
        * values
        * rows
        * cols
        * is_square
    """
    __slots__ = ('_values',)

    def __init__(self, values):
        """Initialize ComplexMatrix."""
        self.values = values

    @classmethod
    def from_dict(cls, data):
        """Create a ComplexMatrix from a dictionary.

        Args:
            data: A ComplexMatrix dictionary in following the format below.

        .. code-block:: python

            {
            "type": "ComplexMatrix",
            "rows": 2,
            "cols": 2,
            "data": [[0, 0], [1, 0], [0, 0], [0, 0]]  # row-major [re, im] pairs
            }
        """
        assert data['type'] == 'ComplexMatrix', \
            'Expected ComplexMatrix dictionary. Got {}.'.format(data['type'])
        rows, cols = int(data['rows']), int(data['cols'])
        if rows < 0 or cols < 0:
            raise ValueError(
                'Matrix dimensions must be non-negative. Got {}x{}.'.format(rows, cols))
        pairs = data['data']
        if len(pairs) != rows * cols:
            raise ValueError(
                'Matrix data has {} entries but {}x{} requires {}.'.format(
                    len(pairs), rows, cols, rows * cols))
        entries = []
        for pair in pairs:
            if len(pair) != 2:
                raise ValueError(
                    'Matrix entries must be [re, im] pairs. Got {}.'.format(pair))
            entries.append(complex(float(pair[0]), float(pair[1])))
        values = np.array(entries, dtype=np.complex128).reshape((rows, cols))
        return cls(values)

    @classmethod
    def from_file(cls, file_path):
        """Load a ComplexMatrix from a JSON file."""
        assert os.path.isfile(file_path), \
            'Cannot find a matrix file at: {}'.format(file_path)
        with open(file_path) as json_file:
            data = json.load(json_file)
        return cls.from_dict(data)

    @property
    def values(self):
        """Get or set a read-only complex128 numpy array of the matrix entries."""
        return self._values

    @values.setter
    def values(self, value):
        value = as_matrix(value).copy()
        value.setflags(write=False)
        self._values = value

    @property
    def rows(self):
        """Get the number of rows."""
        return self._values.shape[0]

    @property
    def cols(self):
        """Get the number of columns."""
        return self._values.shape[1]

    @property
    def is_square(self):
        """Get a boolean for whether the matrix is square."""
        return self.rows == self.cols

    def to_dict(self):
        """ComplexMatrix dictionary representation."""
        flat = self._values.reshape(-1)
        return {
            'type': 'ComplexMatrix',
            'rows': self.rows,
            'cols': self.cols,
            'data': [[float(v.real), float(v.imag)] for v in flat]
        }

    def to_file(self, file_path):
        """Write the matrix to a JSON file and return the file path."""
        with open(file_path, 'w') as json_file:
            json.dump(self.to_dict(), json_file)
        return file_path

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def ToString(self):
        """Overwrite .NET ToString."""
        return self.__repr__()

    def __copy__(self):
        return ComplexMatrix(self._values)

    def __key(self):
        """A tuple based on the object properties, useful for hashing."""
        return (self._values.shape, tuple(self._values.reshape(-1).tolist()))

    def __hash__(self):
        return hash(self.__key())

    def __eq__(self, other):
        return isinstance(other, ComplexMatrix) and self.__key() == other.__key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'ComplexMatrix: [{}x{}]'.format(self.rows, self.cols)


def as_matrix(value, input_name='matrix'):
    """Convert an array-like into a finite two-dimensional complex128 numpy array.

    Args:
        value: A nested list, numpy array or ComplexMatrix.
        input_name: Text used to describe the value in error messages.

    Returns:
        A complex128 numpy array with two dimensions.
    """
    if isinstance(value, ComplexMatrix):
        return value.values
    array = np.asarray(value, dtype=np.complex128)
    if array.ndim != 2:
        raise ValueError('Expected a two-dimensional {}. Got {} dimensions.'.format(
            input_name, array.ndim))
    if not np.all(np.isfinite(array)):
        raise ValueError('The {} contains NaN or infinite entries.'.format(input_name))
    return array


def as_square_matrix(value, input_name='matrix'):
    """Convert an array-like into a square complex128 array, failing otherwise."""
    array = as_matrix(value, input_name)
    if array.shape[0] != array.shape[1]:
        raise ValueError('Expected a square {}. Got shape {}x{}.'.format(
            input_name, array.shape[0], array.shape[1]))
    return array


def matmul(a, b):
    """Get the product A·B of two matrices."""
    a, b = as_matrix(a, 'left factor'), as_matrix(b, 'right factor')
    if a.shape[1] != b.shape[0]:
        raise ValueError('Cannot multiply a {}x{} matrix by a {}x{} matrix.'.format(
            a.shape[0], a.shape[1], b.shape[0], b.shape[1]))
    return a @ b


def adjoint(a):
    """Get the conjugate transpose A^*."""
    return as_matrix(a).conj().T.copy()


def transpose(a):
    """Get the transpose A^T."""
    return as_matrix(a).T.copy()


def conj(a):
    """Get the entrywise complex conjugate of A."""
    return as_matrix(a).conj()


def commutator(a, b):
    """Get the commutator [A, B] = AB - BA of two square matrices of the same size."""
    a = as_square_matrix(a, 'left operand')
    b = as_square_matrix(b, 'right operand')
    if a.shape != b.shape:
        raise ValueError('Cannot take the commutator of a {0}x{0} and a {1}x{1} '
                         'matrix.'.format(a.shape[0], b.shape[0]))
    return a @ b - b @ a


def frobenius_norm(a):
    """Get the Frobenius norm of a matrix as a float."""
    return float(np.linalg.norm(as_matrix(a), 'fro'))


def direct_sum(a, b):
    """Get the block diagonal matrix with A in the upper left and B in the lower right.

    Empty (0x0) blocks are allowed, in which case the other operand is returned.
    """
    a, b = as_matrix(a, 'first block'), as_matrix(b, 'second block')
    result = np.zeros((a.shape[0] + b.shape[0], a.shape[1] + b.shape[1]),
                      dtype=np.complex128)
    result[:a.shape[0], :a.shape[1]] = a
    result[a.shape[0]:, a.shape[1]:] = b
    return result


def identity(n):
    """Get the n x n complex identity matrix."""
    return np.eye(n, dtype=np.complex128)


def exchange(n):
    """Get the n x n exchange matrix (ones on the anti-diagonal)."""
    return np.fliplr(np.eye(n, dtype=np.complex128)).copy()


def scale(a):
    """Get the scale-aware tolerance factor 1 + ||A||_F used across the package."""
    return 1.0 + frobenius_norm(a)
