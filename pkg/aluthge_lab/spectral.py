# coding=utf-8
"""Hermitian eigendecomposition and the spectral functions derived from it."""
from __future__ import division

import numpy as np

from .config import JACOBI_SWEEP_TOL, JACOBI_MAX_SWEEPS, HERMITIAN_TOL, PSD_TOL, \
    RANK_TOL, ROUNDOFF_TOL
from .matrix import as_square_matrix, frobenius_norm


class HermitianEig(object):
    """Eigendecomposition A = V·diag(eigenvalues)·V^* of a Hermitian matrix.

    Args:
        eigenvalues: A real vector of eigenvalues in ascending order.
        eigenvectors: A complex matrix whose columns are the orthonormal
            eigenvectors aligned with the eigenvalues.

    Properties:
        * eigenvalues
        * eigenvectors
        * size
    """
    __slots__ = ('_eigenvalues', '_eigenvectors')

    def __init__(self, eigenvalues, eigenvectors):
        """Initialize HermitianEig."""
        eigenvalues = np.asarray(eigenvalues, dtype=np.float64)
        eigenvectors = np.asarray(eigenvectors, dtype=np.complex128)
        assert eigenvectors.shape == (eigenvalues.size, eigenvalues.size), \
            'Expected {0}x{0} eigenvectors. Got {1}.'.format(
                eigenvalues.size, eigenvectors.shape)
        eigenvalues.setflags(write=False)
        eigenvectors.setflags(write=False)
        self._eigenvalues = eigenvalues
        self._eigenvectors = eigenvectors

    @property
    def eigenvalues(self):
        """Get the ascending real eigenvalues."""
        return self._eigenvalues

    @property
    def eigenvectors(self):
        """Get the matrix of orthonormal eigenvector columns."""
        return self._eigenvectors

    @property
    def size(self):
        """Get the dimension of the decomposed matrix."""
        return self._eigenvalues.size

    def reconstruct(self, values=None):
        """Get V·diag(values)·V^*, using the eigenvalues when values is None."""
        values = self._eigenvalues if values is None else np.asarray(values)
        vecs = self._eigenvectors
        return (vecs * values) @ vecs.conj().T

    def ToString(self):
        """Overwrite .NET ToString."""
        return self.__repr__()

    def __repr__(self):
        return 'HermitianEig: [{}]'.format(
            ', '.join('{:.6g}'.format(v) for v in self._eigenvalues))


def hermitian_part(a, tol=HERMITIAN_TOL):
    """Get (A + A^*)/2 after checking that A is Hermitian within tolerance.

    Args:
        a: A square matrix.
        tol: Allowed ||A - A^*||_F relative to (1 + ||A||_F).
    """
    a = as_square_matrix(a)
    skew = frobenius_norm(a - a.conj().T)
    if skew > tol * (1.0 + frobenius_norm(a)):
        raise ValueError(
            'Matrix is not Hermitian: ||A - A^*||_F = {:.3g}.'.format(skew))
    return (a + a.conj().T) / 2


def hermitian_eig(a, tol=HERMITIAN_TOL):
    """Diagonalize a Hermitian matrix with the cyclic complex Jacobi method.

    Each rotation first removes the phase of the pivot a_pq with a diagonal
    unitary and then applies a real plane rotation that zeroes it. Sweeps stop
    once the off-diagonal Frobenius norm is at most JACOBI_SWEEP_TOL·||A||_F.

    Args:
        a: A square matrix that is Hermitian within tol.
        tol: Allowed ||A - A^*||_F relative to (1 + ||A||_F).

    Returns:
        A HermitianEig with ascending eigenvalues.
    """
    work = np.array(hermitian_part(a, tol), dtype=np.complex128)
    n = work.shape[0]
    vecs = np.eye(n, dtype=np.complex128)
    threshold = JACOBI_SWEEP_TOL * frobenius_norm(work)

    sweeps = 0
    while _off_diagonal_norm(work) > threshold:
        if sweeps == JACOBI_MAX_SWEEPS:
            raise np.linalg.LinAlgError(
                'Jacobi eigensolver did not converge in {} sweeps.'.format(
                    JACOBI_MAX_SWEEPS))
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(work, vecs, p, q)
        sweeps += 1

    eigenvalues = np.real(np.diag(work)).copy()
    order = np.argsort(eigenvalues, kind='stable')
    return HermitianEig(eigenvalues[order], vecs[:, order])


def _off_diagonal_norm(a):
    """Get the Frobenius norm of the off-diagonal part of a square matrix."""
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _rotate(work, vecs, p, q):
    """Apply one complex Jacobi rotation zeroing work[p, q] in place."""
    a_pq = work[p, q]
    magnitude = abs(a_pq)
    if magnitude == 0.0:
        return
    # D^* A D with D[q, q] = exp(-i phi) makes the pivot real and positive
    phase = a_pq / magnitude
    work[:, q] *= phase.conjugate()
    work[q, :] *= phase
    vecs[:, q] *= phase.conjugate()

    a_pp, a_qq = work[p, p].real, work[q, q].real
    theta = (a_qq - a_pp) / (2.0 * magnitude)
    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
    if theta < 0:
        t = -t
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c

    col_p, col_q = work[:, p].copy(), work[:, q].copy()
    work[:, p] = c * col_p - s * col_q
    work[:, q] = s * col_p + c * col_q
    row_p, row_q = work[p, :].copy(), work[q, :].copy()
    work[p, :] = c * row_p - s * row_q
    work[q, :] = s * row_p + c * row_q
    work[p, q] = work[q, p] = 0.0
    work[p, p] = work[p, p].real
    work[q, q] = work[q, q].real

    vec_p, vec_q = vecs[:, p].copy(), vecs[:, q].copy()
    vecs[:, p] = c * vec_p - s * vec_q
    vecs[:, q] = s * vec_p + c * vec_q


def psd_spectrum(p, tol=PSD_TOL, rank_tol=RANK_TOL):
    """Diagonalize a positive semidefinite matrix and clean up its eigenvalues.

    Negative eigenvalues above -tol·(1 + ||P||_F) are clamped to zero and
    eigenvalues at or below rank_tol times the largest one are set to exact
    zeros so that every spectral function agrees on the kernel.

    Returns:
        A tuple with two elements.

        -   eig: The HermitianEig of the matrix.

        -   values: A numpy array of the cleaned, non-negative eigenvalues.
    """
    p = as_square_matrix(p)
    eig = hermitian_eig(p, HERMITIAN_TOL)
    values = np.array(eig.eigenvalues)
    floor = -tol * (1.0 + frobenius_norm(p))
    if values.size and values[0] < floor:
        raise ValueError(
            'Matrix is not positive semidefinite: eigenvalue {:.3g}.'.format(values[0]))
    values[values < 0] = 0.0
    top = values[-1] if values.size else 0.0
    values[values <= rank_tol * top] = 0.0
    return eig, values


def power_values(values, t):
    """Raise non-negative eigenvalues to the power t with 0^t = 0 and 0^0 = 1."""
    values = np.asarray(values, dtype=np.float64)
    if t == 0.0:
        return np.ones_like(values)
    powered = np.where(values > 0, values, 1.0) ** t
    powered[values == 0] = 0.0
    return powered


def inverse_values(values):
    """Invert the non-zero eigenvalues and leave the zeros in place."""
    values = np.asarray(values, dtype=np.float64)
    inverted = np.zeros_like(values)
    inverted[values > 0] = 1.0 / values[values > 0]
    return inverted


def psd_power(p, t, tol=PSD_TOL):
    """Raise a positive semidefinite matrix to a power t in [0, 1].

    Only negative eigenvalues are clamped and eigenvalues at the level of the
    eigensolver roundoff (ROUNDOFF_TOL times the largest) are read as zeros, so
    small but genuine eigenvalues keep their powers. The convention 0^0 = 1
    makes P^0 the identity.

    Args:
        p: A Hermitian positive semidefinite matrix.
        t: The exponent, a number between 0 and 1.
        tol: Negative eigenvalues above -tol·(1 + ||P||_F) are clamped to zero.
    """
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise ValueError('Exponent t must be between 0 and 1. Got {}.'.format(t))
    eig, values = psd_spectrum(p, tol, ROUNDOFF_TOL)
    return eig.reconstruct(power_values(values, t))


def pseudoinverse_psd(p, tol=PSD_TOL, rank_tol=RANK_TOL):
    """Get the Moore-Penrose pseudoinverse of a positive semidefinite matrix.

    Eigenvalues at or below rank_tol times the largest eigenvalue are
    inverted to zero.
    """
    eig, values = psd_spectrum(p, tol, rank_tol)
    return eig.reconstruct(inverse_values(values))
