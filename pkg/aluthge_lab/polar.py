# coding=utf-8
"""Polar decomposition and the Duggal, Aluthge and mean transforms built on it."""
from __future__ import division

import numpy as np

from .config import POLAR_TOL, RANK_TOL, PSD_TOL, ROUNDOFF_TOL
from .matrix import as_square_matrix, frobenius_norm, identity, scale
from .spectral import psd_spectrum, power_values, inverse_values


class PolarParts(object):
    """The factors of a polar decomposition T = U·|T|.

    U is a genuine partial isometry: it is zero on the kernel of T and is not
    extended to a unitary. The modulus |T| = (T^*T)^(1/2) is kept together with
    its eigendecomposition so that every power |T|^t shares one kernel.

    Args:
        u: The partial isometry factor.
        p: The modulus |T|.
        eig: Optional HermitianEig of T^*T aligned with singular_values.
        singular_values: Optional non-negative singular values aligned with eig.

    Properties:
        * u
        * p
        * rank
    """
    __slots__ = ('_u', '_p', '_eig', '_singular_values')

    def __init__(self, u, p, eig=None, singular_values=None):
        """Initialize PolarParts."""
        self._u = as_square_matrix(u, 'partial isometry')
        self._p = as_square_matrix(p, 'modulus')
        assert self._u.shape == self._p.shape, 'PolarParts factors must have the ' \
            'same shape. Got {} and {}.'.format(self._u.shape, self._p.shape)
        self._eig = eig
        self._singular_values = None if singular_values is None else \
            np.asarray(singular_values, dtype=np.float64)

    @property
    def u(self):
        """Get the partial isometry factor U."""
        return self._u

    @property
    def p(self):
        """Get the modulus |T|."""
        return self._p

    @property
    def rank(self):
        """Get the number of non-zero singular values."""
        if self._singular_values is None:
            self._eig, self._singular_values = psd_spectrum(self._p)
        return int(np.count_nonzero(self._singular_values))

    def modulus_power(self, t):
        """Get |T|^t for t in [0, 1] with the convention |T|^0 = I."""
        t = float(t)
        if not 0.0 <= t <= 1.0:
            raise ValueError('Exponent t must be between 0 and 1. Got {}.'.format(t))
        if self._singular_values is None:
            self._eig, self._singular_values = psd_spectrum(self._p)
        return self._eig.reconstruct(power_values(self._singular_values, t))

    def reconstruct(self):
        """Get the product U·|T|."""
        return self._u @ self._p

    def ToString(self):
        """Overwrite .NET ToString."""
        return self.__repr__()

    def __repr__(self):
        return 'PolarParts: [{0}x{0}]'.format(self._u.shape[0])


def polar_decompose(t_matrix, rank_tol=RANK_TOL):
    """Get the polar decomposition T = U·|T| of a square matrix.

    |T| is computed as (T^*T)^(1/2) and U as T·|T|^+, so U vanishes on the
    kernel of T. The kernel is read off the singular values, the eigenvalues
    of |T|: those at or below rank_tol times the largest are set to zero.
    Eigenvalues of T^*T at the level of the eigensolver roundoff are zeroed
    before the square root.

    Args:
        t_matrix: A square complex matrix.
        rank_tol: Relative threshold for kernel detection.

    Returns:
        A PolarParts object.
    """
    t_matrix = as_square_matrix(t_matrix, 'operator')
    gram = t_matrix.conj().T @ t_matrix
    eig, squares = psd_spectrum(gram, PSD_TOL, ROUNDOFF_TOL)
    singular_values = np.sqrt(squares)
    top = singular_values[-1] if singular_values.size else 0.0
    singular_values[singular_values <= rank_tol * top] = 0.0
    p = eig.reconstruct(singular_values)
    u = t_matrix @ eig.reconstruct(inverse_values(singular_values))
    return PolarParts(u, p, eig, singular_values)


def duggal(t_matrix):
    """Get the Duggal transform T^D = |T|·U."""
    parts = polar_decompose(t_matrix)
    return parts.p @ parts.u


def aluthge_t(t_matrix, t):
    """Get the generalized Aluthge transform |T|^t·U·|T|^(1-t) for t in [0, 1].

    t = 1/2 is the Aluthge transform, t = 1 the Duggal transform and t = 0
    returns T itself because |T|^0 = I.
    """
    t = _check_range(t, 1.0)
    parts = polar_decompose(t_matrix)
    return _aluthge_from_parts(parts, t)


def aluthge(t_matrix):
    """Get the Aluthge transform |T|^(1/2)·U·|T|^(1/2)."""
    return aluthge_t(t_matrix, 0.5)


def mean_t(t_matrix, t):
    """Get the generalized mean transform (T~(t) + T~(1-t))/2 for t in [0, 1/2].

    t = 0 gives the mean transform (T + T^D)/2.
    """
    t = _check_range(t, 0.5)
    parts = polar_decompose(t_matrix)
    return (_aluthge_from_parts(parts, t) + _aluthge_from_parts(parts, 1.0 - t)) / 2


def mean(t_matrix):
    """Get the mean transform (T + T^D)/2."""
    return mean_t(t_matrix, 0.0)


def aluthge_iterates(t_matrix, count, t=0.5):
    """Get the iterates T, T~(t), T~(t)~(t), ... of the generalized Aluthge map.

    Args:
        t_matrix: A square complex matrix.
        count: The number of transforms to apply.
        t: The exponent of the generalized Aluthge transform.

    Returns:
        A list of count + 1 matrices starting with T.
    """
    t = _check_range(t, 1.0)
    iterates = [as_square_matrix(t_matrix, 'operator')]
    for _ in range(int(count)):
        iterates.append(_aluthge_from_parts(polar_decompose(iterates[-1]), t))
    return iterates


def is_aluthge_fixed_point(t_matrix, tol=POLAR_TOL):
    """Check whether the Aluthge transform of T equals T.

    This holds exactly for the quasinormal operators.
    """
    t_matrix = as_square_matrix(t_matrix, 'operator')
    distance = frobenius_norm(aluthge(t_matrix) - t_matrix)
    return distance <= tol * scale(t_matrix)


def is_partial_isometry(u, tol=POLAR_TOL):
    """Check whether U^*U is an orthogonal projection within tolerance."""
    u = as_square_matrix(u, 'operator')
    gram = u.conj().T @ u
    bound = tol * scale(gram)
    return frobenius_norm(gram - gram.conj().T) <= bound and \
        frobenius_norm(gram @ gram - gram) <= bound


def is_unitary(u, tol=POLAR_TOL):
    """Check whether U^*U = I within tolerance."""
    u = as_square_matrix(u, 'operator')
    gram = u.conj().T @ u
    return frobenius_norm(gram - identity(u.shape[0])) <= tol * scale(u)


def _aluthge_from_parts(parts, t):
    """Get |T|^t·U·|T|^(1-t) from an existing polar decomposition."""
    return parts.modulus_power(t) @ parts.u @ parts.modulus_power(1.0 - t)


def _check_range(t, upper):
    """Check that an exponent lies in [0, upper] and return it as a float."""
    t = float(t)
    if not 0.0 <= t <= upper:
        raise ValueError('Parameter t must be between 0 and {}. Got {}.'.format(
            upper, t))
    return t
