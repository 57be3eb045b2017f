# coding=utf-8
"""Nilpotent weighted shifts and the closed-form complex symmetry criteria.

A weighted shift of dimension n has the weights (l_1, ..., l_{n-1}) on its
superdiagonal so that T·e_{i+1} = l_i·e_i. Every criterion below depends only
on the moduli |l_i| and compares them with a relative tolerance.
"""
from __future__ import division

import json
import os

import numpy as np

from .config import CRITERION_TOL, RANK_TOL
from .conjugation import AntilinearMap
from .matrix import exchange
from .util import parse_weights


class WeightedShift(object):
    """A finite nilpotent weighted shift.

    Args:
        weights: An iterable of non-zero (possibly complex) numbers for the
            superdiagonal. The dimension of the shift is one more than the
            number of weights.

    Properties:
        * weights
        * n
        * moduli
    """
    __slots__ = ('_weights',)

    def __init__(self, weights):
        """Initialize WeightedShift."""
        self.weights = weights

    @classmethod
    def from_string(cls, text):
        """Create a WeightedShift from comma separated weights like '1,2i,1-i'."""
        return cls(parse_weights(text))

    @classmethod
    def from_dict(cls, data):
        """Create a WeightedShift from a dictionary.

        Args:
            data: A WeightedShift dictionary in following the format below.

        .. code-block:: python

            {
            "type": "WeightedShift",
            "n": 4,
            "weights": [[1, 0], [2, 0], [1, 0]]  # [re, im] pairs
            }
        """
        assert data['type'] == 'WeightedShift', \
            'Expected WeightedShift dictionary. Got {}.'.format(data['type'])
        weights = []
        for pair in data['weights']:
            if len(pair) != 2:
                raise ValueError(
                    'Shift weights must be [re, im] pairs. Got {}.'.format(pair))
            weights.append(complex(float(pair[0]), float(pair[1])))
        shift = cls(weights)
        if 'n' in data and int(data['n']) != shift.n:
            raise ValueError('Shift dimension n={} does not match the {} weights '
                             'given.'.format(data['n'], len(weights)))
        return shift

    @classmethod
    def from_file(cls, file_path):
        """Load a WeightedShift from a JSON file."""
        assert os.path.isfile(file_path), \
            'Cannot find a shift file at: {}'.format(file_path)
        with open(file_path) as json_file:
            data = json.load(json_file)
        return cls.from_dict(data)

    @property
    def weights(self):
        """Get or set a tuple of complex weights (l_1, ..., l_{n-1})."""
        return self._weights

    @weights.setter
    def weights(self, value):
        value = tuple(complex(w) for w in value)
        if len(value) == 0:
            raise ValueError('A weighted shift needs at least one weight.')
        for i, w in enumerate(value):
            if not (np.isfinite(w.real) and np.isfinite(w.imag)):
                raise ValueError('Shift weight {} is not finite.'.format(i + 1))
            if abs(w) <= RANK_TOL:
                raise ValueError(
                    'Shift weights must be non-zero. Weight {} is {}.'.format(i + 1, w))
        self._weights = value

    @property
    def n(self):
        """Get the dimension of the space the shift acts on."""
        return len(self._weights) + 1

    @property
    def moduli(self):
        """Get a tuple with the modulus of each weight."""
        return tuple(abs(w) for w in self._weights)

    def to_matrix(self):
        """Get the n x n matrix with the weights on the superdiagonal."""
        return shift_matrix(self._weights)

    def unimodular_gauge(self):
        """Get the diagonal unitary D and the shift with weights |l_i|.

        D^*·T·D is the matrix of the returned shift.
        """
        phases = [1.0 + 0j]
        for w in self._weights:
            phases.append(phases[-1] * w.conjugate() / abs(w))
        gauge = np.diag(np.array(phases, dtype=np.complex128))
        return gauge, WeightedShift(self.moduli)

    def to_dict(self):
        """WeightedShift dictionary representation."""
        return {
            'type': 'WeightedShift',
            'n': self.n,
            'weights': [[float(w.real), float(w.imag)] for w in self._weights]
        }

    def to_file(self, file_path):
        """Write the shift to a JSON file and return the file path."""
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
        return WeightedShift(self._weights)

    def __key(self):
        """A tuple based on the object properties, useful for hashing."""
        return self._weights

    def __hash__(self):
        return hash(self.__key())

    def __eq__(self, other):
        return isinstance(other, WeightedShift) and self.__key() == other.__key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'WeightedShift: [n={}] ({})'.format(
            self.n, ', '.join('{:.6g}'.format(w) if w.imag else
                              '{:.6g}'.format(w.real) for w in self._weights))


def shift_matrix(superdiagonal):
    """Get the square matrix with a given superdiagonal and zeros elsewhere.

    Zero entries are allowed, which makes this usable for the transforms of a
    shift as well as for the shift itself.
    """
    values = np.asarray(superdiagonal, dtype=np.complex128).reshape(-1)
    return np.diag(values, 1)


def to_matrix(shift):
    """Get the matrix of a WeightedShift."""
    return shift.to_matrix()


def unimodular_gauge(shift):
    """Get the tuple (D, shift with weights |l_i|) with D^*·T·D the gauged matrix."""
    return shift.unimodular_gauge()


def cs_criterion(shift, tol=CRITERION_TOL):
    """Check whether a weighted shift is complex symmetric.

    This holds exactly when |l_i| = |l_{n-i}| for every 1 <= i <= n-1, which
    means the moduli read the same in both directions.
    """
    return _is_palindrome(shift.moduli, tol)


def duggal_cs_criterion(shift, tol=CRITERION_TOL):
    """Check whether the Duggal transform of a weighted shift is complex symmetric.

    This holds exactly when |l_i| = |l_{n-1-i}| for every 1 <= i <= n-2 and is
    always true for n <= 3.
    """
    return _is_palindrome(shift.moduli[:-1], tol)


def aluthge_cs_criterion(shift, t, tol=CRITERION_TOL):
    """Check whether the generalized Aluthge transform of a shift is complex symmetric.

    For t in (0, 1] this holds exactly when the products
    |l_i|^t·|l_{i+1}|^(1-t) for 1 <= i <= n-2 read the same in both directions.
    t = 1 reduces to the Duggal criterion.
    """
    t = float(t)
    if not 0.0 < t <= 1.0:
        raise ValueError('Parameter t must be in (0, 1]. Got {}.'.format(t))
    moduli = shift.moduli
    products = [moduli[i] ** t * moduli[i + 1] ** (1.0 - t)
                for i in range(len(moduli) - 1)]
    return _is_palindrome(products, tol)


def mean_cs_criterion(shift, t, tol=CRITERION_TOL):
    """Check whether the generalized mean transform of a shift is complex symmetric.

    For t in (0, 1/2] the transform is 0 ⊕ (a shift with weights
    (|l_i|^t·|l_{i+1}|^(1-t) + |l_i|^(1-t)·|l_{i+1}|^t)/2) and the criterion asks
    those sums to read the same in both directions. For t = 0 the mean
    transform is itself a shift with positive weights
    (|l_1|/2, (|l_1|+|l_2|)/2, ..., (|l_{n-2}|+|l_{n-1}|)/2) and the shift
    criterion is applied to it directly.
    """
    t = float(t)
    if not 0.0 <= t <= 0.5:
        raise ValueError('Parameter t must be in [0, 1/2]. Got {}.'.format(t))
    if t == 0.0:
        return _is_palindrome(mean_weights(shift, 0.0), tol)
    moduli = shift.moduli
    sums = [moduli[i] ** t * moduli[i + 1] ** (1.0 - t) +
            moduli[i] ** (1.0 - t) * moduli[i + 1] ** t
            for i in range(len(moduli) - 1)]
    return _is_palindrome(sums, tol)


def both_cs_criterion(shift, tol=CRITERION_TOL):
    """Check whether a shift and its Duggal transform are both complex symmetric.

    This holds exactly when all the weight moduli are equal.
    """
    moduli = shift.moduli
    return all(_close(moduli[0], m, tol) for m in moduli[1:])


def flip_conjugation(n):
    """Get the conjugation (z_1, ..., z_n) -> (conj(z_n), ..., conj(z_1))."""
    if int(n) < 1:
        raise ValueError('Conjugation dimension must be at least 1. Got {}.'.format(n))
    return AntilinearMap(exchange(int(n)))


def duggal_weights(shift):
    """Get the superdiagonal of the Duggal transform in the unimodular gauge.

    The result is (0, |l_1|, ..., |l_{n-2}|): the transform is 0 ⊕ a shift.
    """
    return aluthge_weights(shift, 1.0)


def aluthge_weights(shift, t):
    """Get the superdiagonal of the generalized Aluthge transform for t in [0, 1].

    The values hold in the unimodular gauge, where the transform of the gauged
    shift is the shift_matrix of the returned tuple. The first entry is 0 for
    t > 0 and |l_1| for t = 0, followed by |l_i|^t·|l_{i+1}|^(1-t).
    """
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise ValueError('Parameter t must be in [0, 1]. Got {}.'.format(t))
    moduli = shift.moduli
    diagonal = (0.0,) + moduli  # the diagonal of |T| in the gauged basis
    return tuple(_power(diagonal[i], t) * _power(diagonal[i + 1], 1.0 - t)
                 for i in range(len(moduli)))


def mean_weights(shift, t):
    """Get the superdiagonal of the generalized mean transform for t in [0, 1/2].

    The values hold in the unimodular gauge. For t = 0 this is
    (|l_1|/2, (|l_1|+|l_2|)/2, ..., (|l_{n-2}|+|l_{n-1}|)/2).
    """
    t = float(t)
    if not 0.0 <= t <= 0.5:
        raise ValueError('Parameter t must be in [0, 1/2]. Got {}.'.format(t))
    first, second = aluthge_weights(shift, t), aluthge_weights(shift, 1.0 - t)
    return tuple((a + b) / 2 for a, b in zip(first, second))


def _power(value, t):
    """Raise a non-negative number to the power t with 0^0 = 1."""
    return 1.0 if t == 0.0 else value ** t


def _close(a, b, tol):
    """Compare two non-negative numbers with a relative tolerance."""
    return abs(a - b) <= tol * max(abs(a), abs(b))


def _is_palindrome(values, tol):
    """Check that a sequence of moduli reads the same in both directions."""
    values = tuple(values)
    count = len(values)
    return all(_close(values[i], values[count - 1 - i], tol)
               for i in range(count // 2))
