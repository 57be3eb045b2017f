# coding=utf-8
"""Structural predicates: normal, quasinormal, binormal, centered and hyponormal.

Each commutator test passes when its Frobenius norm is at most
tol·(1 + ||T||_F^2), the natural scale of a product of two copies of T.
"""
from __future__ import division

import itertools
import logging

import numpy as np

from .config import STRUCTURE_TOL, PSD_TOL
from .matrix import as_square_matrix, commutator, frobenius_norm
from .polar import polar_decompose
from .spectral import hermitian_eig

_logger = logging.getLogger(__name__)


def _bound(t_matrix, tol):
    """Get the commutator tolerance for a given operator."""
    return tol * (1.0 + frobenius_norm(t_matrix) ** 2)


def normal_defect(t_matrix):
    """Get ||[T, T^*]||_F."""
    t_matrix = as_square_matrix(t_matrix, 'operator')
    return frobenius_norm(commutator(t_matrix, t_matrix.conj().T))


def quasinormal_defect(t_matrix):
    """Get ||[T, T^*T]||_F."""
    t_matrix = as_square_matrix(t_matrix, 'operator')
    return frobenius_norm(commutator(t_matrix, t_matrix.conj().T @ t_matrix))


def binormal_defects(t_matrix):
    """Get the two binormality commutator norms ||[T^*T, TT^*]||_F and ||[|T|, |T^*|]||_F."""
    t_matrix = as_square_matrix(t_matrix, 'operator')
    adj = t_matrix.conj().T
    squares = frobenius_norm(commutator(adj @ t_matrix, t_matrix @ adj))
    moduli = frobenius_norm(
        commutator(polar_decompose(t_matrix).p, polar_decompose(adj).p))
    return squares, moduli


def is_normal(t_matrix, tol=STRUCTURE_TOL):
    """Check whether T commutes with T^*."""
    return normal_defect(t_matrix) <= _bound(t_matrix, tol)


def is_quasinormal(t_matrix, tol=STRUCTURE_TOL):
    """Check whether T commutes with T^*T."""
    return quasinormal_defect(t_matrix) <= _bound(t_matrix, tol)


def is_binormal(t_matrix, tol=STRUCTURE_TOL):
    """Check whether T^*T commutes with TT^*.

    The test is made both on [T^*T, TT^*] and on [|T|, |T^*|]. T is reported
    binormal only when both forms pass. A disagreement between the forms means
    the tolerance is too tight or too loose for the input, so it is logged as a
    warning and False is returned.
    """
    squares, moduli = binormal_defects(t_matrix)
    bound = _bound(t_matrix, tol)
    by_squares, by_moduli = squares <= bound, moduli <= bound
    if by_squares != by_moduli:
        _logger.warning(
            'Binormality tests disagree: ||[T^*T, TT^*]||_F = %.3g and '
            '||[|T|, |T^*|]||_F = %.3g against a bound of %.3g.',
            squares, moduli, bound)
    return bool(by_squares and by_moduli)


def centered_family(t_matrix):
    """Get the operators (T^k)^*T^k and T^k(T^k)^* for 1 <= k <= n.

    The family of a centered operator is infinite in general but it is finite
    for a nilpotent T since T^n = 0. The list is truncated at k = n.
    """
    t_matrix = as_square_matrix(t_matrix, 'operator')
    family = []
    power = np.eye(t_matrix.shape[0], dtype=np.complex128)
    for _ in range(t_matrix.shape[0]):
        power = power @ t_matrix
        adj = power.conj().T
        family.append(adj @ power)
        family.append(power @ adj)
    return family


def centered_defect(t_matrix):
    """Get the largest relative commutator norm across the centered family.

    Each pair X, Y contributes ||[X, Y]||_F / (1 + ||X||_F·||Y||_F).
    """
    worst = 0.0
    for x, y in itertools.combinations(centered_family(t_matrix), 2):
        size = 1.0 + frobenius_norm(x) * frobenius_norm(y)
        worst = max(worst, frobenius_norm(commutator(x, y)) / size)
    return worst


def is_centered(t_matrix, tol=STRUCTURE_TOL):
    """Check whether all the operators of the centered family commute."""
    return centered_defect(t_matrix) <= tol


def is_hyponormal(t_matrix, tol=PSD_TOL):
    """Check whether T^*T - TT^* is positive semidefinite."""
    t_matrix = as_square_matrix(t_matrix, 'operator')
    adj = t_matrix.conj().T
    self_commutator = adj @ t_matrix - t_matrix @ adj
    lowest = hermitian_eig(self_commutator).eigenvalues
    if lowest.size == 0:
        return True
    return bool(lowest[0] >= -tol * (1.0 + frobenius_norm(t_matrix) ** 2))
