# coding=utf-8
"""Antilinear maps x -> M·conj(x), conjugations and partial conjugations.

An antilinear map C is stored through its matrix M so that C(x) = M·conj(x).
C is a conjugation (an isometric antilinear involution) exactly when M is
unitary and M = M^T, and T = C·T^*·C holds exactly when T·M = M·T^T.
"""
from __future__ import division

import numpy as np

from .config import CONJUGATION_TOL
from .matrix import ComplexMatrix, as_matrix, as_square_matrix, frobenius_norm, \
    identity, scale


class AntilinearMap(object):
    """An antilinear map on C^n acting as x -> M·conj(x).

    Args:
        matrix: A square complex matrix M.

    Properties:
        * matrix
        * size
    """
    __slots__ = ('_matrix',)

    def __init__(self, matrix):
        """Initialize AntilinearMap."""
        self.matrix = matrix

    @classmethod
    def from_dict(cls, data):
        """Create an AntilinearMap from a dictionary.

        Args:
            data: An AntilinearMap dictionary in following the format below.

        .. code-block:: python

            {
            "type": "AntilinearMap",
            "matrix": {}  # ComplexMatrix dictionary
            }
        """
        assert data['type'] == 'AntilinearMap', \
            'Expected AntilinearMap dictionary. Got {}.'.format(data['type'])
        return cls(ComplexMatrix.from_dict(data['matrix']))

    @property
    def matrix(self):
        """Get or set a read-only square complex matrix M of the map x -> M·conj(x)."""
        return self._matrix

    @matrix.setter
    def matrix(self, value):
        value = as_square_matrix(value, 'antilinear map matrix').copy()
        value.setflags(write=False)
        self._matrix = value

    @property
    def size(self):
        """Get the dimension of the space the map acts on."""
        return self._matrix.shape[0]

    def apply(self, x):
        """Apply the map to a vector (or to the columns of a matrix)."""
        x = np.asarray(x, dtype=np.complex128)
        if x.shape[0] != self.size:
            raise ValueError('Cannot apply a size {} antilinear map to an input '
                             'with {} rows.'.format(self.size, x.shape[0]))
        return self._matrix @ x.conj()

    def to_dict(self):
        """AntilinearMap dictionary representation."""
        return {
            'type': 'AntilinearMap',
            'matrix': ComplexMatrix(self._matrix).to_dict()
        }

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def ToString(self):
        """Overwrite .NET ToString."""
        return self.__repr__()

    def __copy__(self):
        return AntilinearMap(self._matrix)

    def __key(self):
        """A tuple based on the object properties, useful for hashing."""
        return (self.size, tuple(self._matrix.reshape(-1).tolist()))

    def __hash__(self):
        return hash(self.__key())

    def __eq__(self, other):
        return isinstance(other, AntilinearMap) and self.__key() == other.__key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'AntilinearMap: [{0}x{0}]'.format(self.size)


def entrywise_conjugation(n):
    """Get the entrywise conjugation x -> conj(x) on C^n (M = I)."""
    return AntilinearMap(identity(n))


def compose_antilinear(first, second):
    """Get the linear map first∘second of two antilinear maps.

    Args:
        first: The AntilinearMap applied last.
        second: The AntilinearMap applied first.

    Returns:
        The matrix M_first·conj(M_second).
    """
    _check_same_size(first, second)
    return first.matrix @ second.matrix.conj()


def compose_with_linear(antilinear, linear):
    """Get the antilinear map antilinear∘linear, where linear is a matrix."""
    linear = as_square_matrix(linear, 'linear map')
    if linear.shape[0] != antilinear.size:
        raise ValueError('Cannot compose a size {} antilinear map with a {}x{} '
                         'matrix.'.format(antilinear.size, *linear.shape))
    return AntilinearMap(antilinear.matrix @ linear.conj())


def support_projection(antilinear):
    """Get M·conj(M), the square of the map, which is linear.

    For a partial conjugation this is the orthogonal projection onto its support.
    """
    return compose_antilinear(antilinear, antilinear)


def is_conjugation(antilinear, tol=CONJUGATION_TOL):
    """Check whether an antilinear map is a conjugation.

    The check is M^*M = I and M = M^T, both within tol·(1 + ||M||_F).
    """
    m = antilinear.matrix
    bound = tol * scale(m)
    return frobenius_norm(m.conj().T @ m - identity(m.shape[0])) <= bound and \
        frobenius_norm(m - m.T) <= bound


def is_partial_conjugation(antilinear, tol=CONJUGATION_TOL):
    """Check whether an antilinear map is a partial conjugation.

    A partial conjugation has M = M^T and its square M·conj(M) is an orthogonal
    projection. The map is then a conjugation of the range of that projection
    and vanishes on its orthogonal complement. Every conjugation is a partial
    conjugation with full support.
    """
    m = antilinear.matrix
    bound = tol * scale(m)
    if frobenius_norm(m - m.T) > bound:
        return False
    proj = support_projection(antilinear)
    return frobenius_norm(proj - proj.conj().T) <= bound and \
        frobenius_norm(proj @ proj - proj) <= bound


def check_cs_with(t_matrix, antilinear, tol=CONJUGATION_TOL):
    """Get the residual ||T·M - M·T^T||_F of T against a conjugation.

    The residual is zero exactly when T = C·T^*·C for the conjugation C.

    Args:
        t_matrix: A square complex matrix.
        antilinear: An AntilinearMap that must be a conjugation.
        tol: Tolerance for the conjugation check.
    """
    t_matrix = as_square_matrix(t_matrix, 'operator')
    if t_matrix.shape[0] != antilinear.size:
        raise ValueError('Cannot check a {0}x{0} operator against a size {1} '
                         'conjugation.'.format(t_matrix.shape[0], antilinear.size))
    if not is_conjugation(antilinear, tol):
        raise ValueError('The antilinear map is not a conjugation: its matrix must '
                         'be unitary and symmetric.')
    m = antilinear.matrix
    return frobenius_norm(t_matrix @ m - m @ t_matrix.T)


def partial_conjugation_from_polar(conjugation, u):
    """Get the partial conjugation J = C∘U attached to a polar factor.

    When T = C·T^*·C with polar decomposition T = U·|T|, the map J = C·U is
    a partial conjugation supported on the closure of the range of |T| and
    C∘J = U.

    Args:
        conjugation: The AntilinearMap C, a conjugation.
        u: The partial isometry factor U of T.
    """
    u = as_matrix(u, 'partial isometry')
    return compose_with_linear(conjugation, u)


def extend_partial_conjugation(partial, tol=CONJUGATION_TOL):
    """Extend a partial conjugation to the whole space.

    The kernel of the partial conjugation is filled with the map x -> Q·conj(x),
    where Q = I - M·conj(M) is the projection onto that kernel. This is the
    entrywise conjugation when the kernel is spanned by standard basis vectors.

    Raises:
        ValueError: If the input is not a partial conjugation or if the
            extension fails to be a conjugation (which happens when the kernel
            is not invariant under entrywise conjugation).
    """
    if not is_partial_conjugation(partial, tol):
        raise ValueError('The antilinear map is not a partial conjugation.')
    kernel = identity(partial.size) - support_projection(partial)
    extended = AntilinearMap(partial.matrix + kernel)
    if not is_conjugation(extended, tol):
        raise ValueError('The kernel of the partial conjugation is not invariant '
                         'under entrywise conjugation so it cannot be extended '
                         'this way.')
    return extended


def _check_same_size(first, second):
    """Check that two antilinear maps act on the same space."""
    if first.size != second.size:
        raise ValueError('Cannot compose antilinear maps of sizes {} and {}.'.format(
            first.size, second.size))
