# coding=utf-8
"""Numerical complex symmetry certifier working over the unitary group.

A matrix T is complex symmetric exactly when some unitary V makes
A = V^*·T·V equal to its own transpose. The certifier minimizes
f(V) = ||A - A^T||_F^2 from several seeded random unitaries. When a V with a
tiny residual is found, J = V·V^T is a unitary symmetric matrix with
T·J - J·T^T = V·(A - A^T)·V^T, which makes J the matrix of a conjugation
that certifies the answer.
"""
from __future__ import division

import functools
import logging
from collections import deque
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from honeybee.typing import int_in_range, float_in_range

from .config import CERTIFY_SEED, CERTIFY_RESTARTS, CERTIFY_MAX_ITERS, \
    CERTIFY_STEP, CERTIFY_BACKTRACK, CERTIFY_MAX_BACKTRACKS, CERTIFY_STALL_TOL, \
    CERTIFY_STALL_COUNT, CERTIFY_PLATEAU_WINDOW, CERTIFY_PLATEAU_TOL, \
    CERTIFY_UNITARY_TOL, CERTIFY_TARGET_RATIO, CERTIFY_METHOD, CERTIFY_WORKERS, \
    TAU_YES, TAU_NO
from .matrix import ComplexMatrix, as_square_matrix, frobenius_norm, identity, scale

_logger = logging.getLogger(__name__)

METHODS = ('gauss-newton', 'gradient')


class CertifyPar(object):
    """Settings for a run of the complex symmetry certifier.

    Args:
        seed: Integer seed. Restart k starts from a unitary drawn with the
            seed XOR k. (Default: 0x5EED).
        restarts: Number of random starting points. (Default: 16).
        max_iters: Maximum number of descent iterations per restart. (Default: 500).
        step: Initial step of the plain gradient direction. The Gauss-Newton
            direction always starts from a full step. (Default: 0.1).
        backtrack: Factor between 0 and 1 that shrinks a step that fails to
            decrease the objective. (Default: 0.5).
        tau_yes: Relative residual at or below which T is reported as complex
            symmetric. (Default: 1e-7).
        tau_no: Relative residual at or above which T is reported as not
            complex symmetric. (Default: 1e-3).
        method: Text for the descent direction, either gauss-newton or
            gradient. (Default: gauss-newton).
        workers: Number of threads that run restarts. The verdict does not
            depend on this value. (Default: 1).

    Properties:
        * seed
        * restarts
        * max_iters
        * step
        * backtrack
        * tau_yes
        * tau_no
        * method
        * workers
    """
    __slots__ = ('_seed', '_restarts', '_max_iters', '_step', '_backtrack',
                 '_tau_yes', '_tau_no', '_method', '_workers')

    def __init__(self, seed=CERTIFY_SEED, restarts=CERTIFY_RESTARTS,
                 max_iters=CERTIFY_MAX_ITERS, step=CERTIFY_STEP,
                 backtrack=CERTIFY_BACKTRACK, tau_yes=TAU_YES, tau_no=TAU_NO,
                 method=CERTIFY_METHOD, workers=CERTIFY_WORKERS):
        """Initialize CertifyPar."""
        self.seed = seed
        self.restarts = restarts
        self.max_iters = max_iters
        self.step = step
        self.backtrack = backtrack
        self._tau_yes = 0.0
        self._tau_no = float_in_range(tau_no, 0.0, input_name='certifier tau_no')
        self.tau_yes = tau_yes
        self.method = method
        self.workers = workers

    @classmethod
    def from_dict(cls, data):
        """Create a CertifyPar object from a dictionary.

        Args:
            data: A CertifyPar dictionary in following the format below.

        .. code-block:: python

            {
            "type": "CertifyPar",
            "seed": 24301,
            "restarts": 16,
            "max_iters": 500,
            "step": 0.1,
            "backtrack": 0.5,
            "tau_yes": 1e-07,
            "tau_no": 0.001,
            "method": "gauss-newton",
            "workers": 1
            }
        """
        assert data['type'] == 'CertifyPar', \
            'Expected CertifyPar dictionary. Got {}.'.format(data['type'])
        defaults = cls()
        keys = ('seed', 'restarts', 'max_iters', 'step', 'backtrack',
                'tau_yes', 'tau_no', 'method', 'workers')
        args = [data[key] if key in data and data[key] is not None
                else getattr(defaults, key) for key in keys]
        return cls(*args)

    @property
    def seed(self):
        """Get or set a non-negative integer for the base random seed."""
        return self._seed

    @seed.setter
    def seed(self, value):
        self._seed = int_in_range(value, 0, input_name='certifier seed')

    @property
    def restarts(self):
        """Get or set a positive integer for the number of random restarts."""
        return self._restarts

    @restarts.setter
    def restarts(self, value):
        self._restarts = int_in_range(value, 1, input_name='certifier restarts')

    @property
    def max_iters(self):
        """Get or set a positive integer for the iterations allowed per restart."""
        return self._max_iters

    @max_iters.setter
    def max_iters(self, value):
        self._max_iters = int_in_range(value, 1, input_name='certifier max_iters')

    @property
    def step(self):
        """Get or set a positive number for the initial gradient step."""
        return self._step

    @step.setter
    def step(self, value):
        value = float_in_range(value, 0.0, input_name='certifier step')
        assert value > 0, 'Certifier step must be greater than zero.'
        self._step = value

    @property
    def backtrack(self):
        """Get or set a number between 0 and 1 for the step shrink factor."""
        return self._backtrack

    @backtrack.setter
    def backtrack(self, value):
        value = float_in_range(value, 0.0, 1.0, 'certifier backtrack')
        assert 0 < value < 1, 'Certifier backtrack must be between 0 and 1 ' \
            '(exclusive). Got {}.'.format(value)
        self._backtrack = value

    @property
    def tau_yes(self):
        """Get or set a number for the relative residual that proves symmetry."""
        return self._tau_yes

    @tau_yes.setter
    def tau_yes(self, value):
        value = float_in_range(value, 0.0, input_name='certifier tau_yes')
        assert value <= self._tau_no, 'Certifier tau_yes ({}) must not exceed ' \
            'tau_no ({}).'.format(value, self._tau_no)
        self._tau_yes = value

    @property
    def tau_no(self):
        """Get or set a number for the relative residual that rejects symmetry."""
        return self._tau_no

    @tau_no.setter
    def tau_no(self, value):
        value = float_in_range(value, 0.0, input_name='certifier tau_no')
        assert value >= self._tau_yes, 'Certifier tau_no ({}) must not be below ' \
            'tau_yes ({}).'.format(value, self._tau_yes)
        self._tau_no = value

    @property
    def method(self):
        """Get or set text for the descent direction (gauss-newton or gradient)."""
        return self._method

    @method.setter
    def method(self, value):
        value = str(value).lower()
        assert value in METHODS, 'Certifier method "{}" is not supported. ' \
            'Choose from: {}.'.format(value, ', '.join(METHODS))
        self._method = value

    @property
    def workers(self):
        """Get or set a positive integer for the number of restart threads."""
        return self._workers

    @workers.setter
    def workers(self, value):
        self._workers = int_in_range(value, 1, input_name='certifier workers')

    def to_dict(self):
        """CertifyPar dictionary representation."""
        return {
            'type': 'CertifyPar',
            'seed': self.seed,
            'restarts': self.restarts,
            'max_iters': self.max_iters,
            'step': self.step,
            'backtrack': self.backtrack,
            'tau_yes': self.tau_yes,
            'tau_no': self.tau_no,
            'method': self.method,
            'workers': self.workers
        }

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def ToString(self):
        """Overwrite .NET ToString."""
        return self.__repr__()

    def __copy__(self):
        return CertifyPar(
            self.seed, self.restarts, self.max_iters, self.step, self.backtrack,
            self.tau_yes, self.tau_no, self.method, self.workers)

    def __key(self):
        """A tuple based on the object properties, useful for hashing."""
        return (self.seed, self.restarts, self.max_iters, self.step, self.backtrack,
                self.tau_yes, self.tau_no, self.method, self.workers)

    def __hash__(self):
        return hash(self.__key())

    def __eq__(self, other):
        return isinstance(other, CertifyPar) and self.__key() == other.__key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'CertifyPar: [seed: {}] [restarts: {}] [method: {}]'.format(
            self.seed, self.restarts, self.method)


class SymmetryVerdict(object):
    """The outcome of a complex symmetry certification.

    Args:
        status: Text for the verdict. One of CS, NotCS or Inconclusive.
        residual: The best ||A - A^T||_F found across the restarts.
        certificate: A unitary symmetric matrix J with T·J = J·T^T up to the
            residual. Only present when the status is CS.
        restarts_used: The number of restarts that contributed to the verdict.
        seed: The base seed of the run.
        tau_yes: The relative residual used to decide CS.
        tau_no: The relative residual used to decide NotCS.

    Properties:
        * status
        * residual
        * certificate
        * restarts_used
        * seed
        * tau_yes
        * tau_no
        * is_cs
    """
    CS = 'CS'
    NOT_CS = 'NotCS'
    INCONCLUSIVE = 'Inconclusive'
    STATUSES = (CS, NOT_CS, INCONCLUSIVE)
    __slots__ = ('_status', '_residual', '_certificate', '_restarts_used',
                 '_seed', '_tau_yes', '_tau_no')

    def __init__(self, status, residual, certificate=None, restarts_used=0,
                 seed=CERTIFY_SEED, tau_yes=TAU_YES, tau_no=TAU_NO):
        """Initialize SymmetryVerdict."""
        assert status in self.STATUSES, 'Verdict status "{}" is not one of ' \
            '{}.'.format(status, ', '.join(self.STATUSES))
        residual = float(residual)
        if residual < 0:
            raise ValueError('Verdict residual must be non-negative. '
                             'Got {}.'.format(residual))
        if status == self.CS and certificate is None:
            raise ValueError('A CS verdict requires a certificate.')
        self._status = status
        self._residual = residual
        self._certificate = None if certificate is None else \
            ComplexMatrix(certificate).values
        self._restarts_used = int(restarts_used)
        self._seed = int(seed)
        self._tau_yes = float(tau_yes)
        self._tau_no = float(tau_no)

    @classmethod
    def from_dict(cls, data):
        """Create a SymmetryVerdict from a dictionary.

        Args:
            data: A SymmetryVerdict dictionary in following the format below.

        .. code-block:: python

            {
            "type": "SymmetryVerdict",
            "status": "CS",
            "residual": 1.2e-15,
            "certificate": {},  # ComplexMatrix dictionary or None
            "restarts_used": 1,
            "seed": 24301,
            "tau_yes": 1e-07,
            "tau_no": 0.001
            }
        """
        assert data['type'] == 'SymmetryVerdict', \
            'Expected SymmetryVerdict dictionary. Got {}.'.format(data['type'])
        certificate = None
        if data.get('certificate') is not None:
            certificate = ComplexMatrix.from_dict(data['certificate'])
        return cls(data['status'], data['residual'], certificate,
                   data.get('restarts_used', 0), data.get('seed', CERTIFY_SEED),
                   data.get('tau_yes', TAU_YES), data.get('tau_no', TAU_NO))

    @property
    def status(self):
        """Get text for the verdict status."""
        return self._status

    @property
    def residual(self):
        """Get the best residual ||A - A^T||_F found."""
        return self._residual

    @property
    def certificate(self):
        """Get the unitary symmetric certificate J or None."""
        return self._certificate

    @property
    def restarts_used(self):
        """Get the number of restarts that contributed to the verdict."""
        return self._restarts_used

    @property
    def seed(self):
        """Get the base seed of the run."""
        return self._seed

    @property
    def tau_yes(self):
        """Get the relative residual used to decide CS."""
        return self._tau_yes

    @property
    def tau_no(self):
        """Get the relative residual used to decide NotCS."""
        return self._tau_no

    @property
    def is_cs(self):
        """Get a boolean for whether the status is CS."""
        return self._status == self.CS

    def to_dict(self):
        """SymmetryVerdict dictionary representation."""
        certificate = None if self._certificate is None else \
            ComplexMatrix(self._certificate).to_dict()
        return {
            'type': 'SymmetryVerdict',
            'status': self.status,
            'residual': self.residual,
            'certificate': certificate,
            'restarts_used': self.restarts_used,
            'seed': self.seed,
            'tau_yes': self.tau_yes,
            'tau_no': self.tau_no
        }

    def ToString(self):
        """Overwrite .NET ToString."""
        return self.__repr__()

    def __repr__(self):
        return 'SymmetryVerdict: {} [residual: {:.3g}]'.format(
            self.status, self.residual)


def objective(t_matrix, v):
    """Get f(V) = ||A - A^T||_F^2 with A = V^*·T·V."""
    a = v.conj().T @ t_matrix @ v
    return frobenius_norm(a - a.T) ** 2


def riemannian_gradient(t_matrix, v):
    """Get the skew-Hermitian gradient of f at V in the frame V·(I + X).

    The directional derivative of f along the tangent vector V·X is
    Re tr(G^*·X) where G = 4·skew(A^*·R - R·A^*), R = A - A^T and
    skew(Y) = (Y - Y^*)/2.
    """
    a = v.conj().T @ t_matrix @ v
    return _gradient(a, a - a.T)


def cayley(x):
    """Get the unitary Cayley transform (I - X/2)^-1·(I + X/2) of a skew-Hermitian X."""
    eye = identity(x.shape[0])
    return np.linalg.solve(eye - x / 2, eye + x / 2)


def random_unitary(n, rng):
    """Draw a Haar distributed n x n unitary from a numpy Generator."""
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    return _orthonormalize(z)


def certify_cs(t_matrix, certify_par=None):
    """Decide numerically whether a square matrix is complex symmetric.

    Restart k starts from a random unitary drawn with seed XOR k and runs a
    descent with backtracking on f(V) = ||V^*TV - (V^*TV)^T||_F^2. Restarts
    stop at the first one that reaches the CS bound. With several workers all
    restarts run and the results are cut back to that same first success, so
    the verdict is the same for any number of workers. Ties in the best
    residual go to the lowest restart index.

    Args:
        t_matrix: A square complex matrix with finite entries.
        certify_par: An optional CertifyPar with the run settings.

    Returns:
        A SymmetryVerdict. Its status is CS when the best residual is at most
        tau_yes·(1 + ||T||_F), NotCS when it is at least tau_no·(1 + ||T||_F)
        and Inconclusive in between.
    """
    par = certify_par if certify_par is not None else CertifyPar()
    t_matrix = as_square_matrix(t_matrix, 'operator')
    n = t_matrix.shape[0]
    size = scale(t_matrix)
    yes_bound, no_bound = par.tau_yes * size, par.tau_no * size
    if n == 0:
        return SymmetryVerdict(SymmetryVerdict.CS, 0.0, np.zeros((0, 0)), 0,
                               par.seed, par.tau_yes, par.tau_no)

    run = functools.partial(
        _restart, t_matrix, par, yes_bound * CERTIFY_TARGET_RATIO, no_bound)
    if par.workers > 1 and par.restarts > 1:
        with ThreadPoolExecutor(max_workers=par.workers) as pool:
            outcomes = list(pool.map(run, range(par.restarts)))
        first = next((k for k, (res, _) in enumerate(outcomes) if res <= yes_bound),
                     None)
        if first is not None:
            outcomes = outcomes[:first + 1]
    else:
        outcomes = []
        for k in range(par.restarts):
            outcomes.append(run(k))
            if outcomes[-1][0] <= yes_bound:
                break

    best = min(range(len(outcomes)), key=lambda k: (outcomes[k][0], k))
    residual, v = outcomes[best]
    if residual <= yes_bound:
        return SymmetryVerdict(SymmetryVerdict.CS, residual, v @ v.T, len(outcomes),
                               par.seed, par.tau_yes, par.tau_no)
    status = SymmetryVerdict.NOT_CS if residual >= no_bound \
        else SymmetryVerdict.INCONCLUSIVE
    residual = residual if np.isfinite(residual) else np.finfo(np.float64).max
    return SymmetryVerdict(status, residual, None, len(outcomes),
                           par.seed, par.tau_yes, par.tau_no)


def _restart(t_matrix, par, target, plateau_floor, k):
    """Run one descent from the starting point of restart k.

    Returns:
        A tuple of the final residual (infinite when the iterates blow up)
        and the final unitary V.
    """
    rng = np.random.default_rng(par.seed ^ k)
    v = random_unitary(t_matrix.shape[0], rng)
    v, iterations = _descend(t_matrix, v, par, target, plateau_floor)
    v = _orthonormalize(v)
    a = v.conj().T @ t_matrix @ v
    residual = frobenius_norm(a - a.T) if np.all(np.isfinite(a)) else float('inf')
    _logger.debug('restart %d finished after %d iterations with residual %.3e',
                  k, iterations, residual)
    return residual, v


def _descend(t_matrix, v, par, target, plateau_floor):
    """Decrease f from V until it reaches target, stalls or runs out of iterations.

    Only steps that decrease f are accepted. The iterate is re-orthonormalized
    whenever ||V^*V - I||_F drifts above CERTIFY_UNITARY_TOL. A restart whose
    residual is still at or above plateau_floor after f dropped by less than
    CERTIFY_PLATEAU_TOL over the last CERTIFY_PLATEAU_WINDOW iterations has
    settled away from a symmetric form and is ended.
    """
    a = v.conj().T @ t_matrix @ v
    r = a - a.T
    value = frobenius_norm(r) ** 2
    history = deque([value], maxlen=CERTIFY_PLATEAU_WINDOW + 1)
    stalled, iterations = 0, 0
    while iterations < par.max_iters:
        if not np.isfinite(value) or np.sqrt(value) <= target:
            break
        if par.method == 'gradient':
            direction, step = -_gradient(a, r), par.step
        else:
            direction, step = _gauss_newton_direction(a, r), 1.0

        accepted = False
        for _ in range(CERTIFY_MAX_BACKTRACKS):
            candidate = v @ cayley(step * direction)
            a_new = candidate.conj().T @ t_matrix @ candidate
            r_new = a_new - a_new.T
            value_new = frobenius_norm(r_new) ** 2
            if value_new < value:
                accepted = True
                break
            step *= par.backtrack
        iterations += 1
        if not accepted:
            break

        decrease = (value - value_new) / value
        v, a, r, value = candidate, a_new, r_new, value_new
        if frobenius_norm(v.conj().T @ v - identity(v.shape[0])) > CERTIFY_UNITARY_TOL:
            v = _orthonormalize(v)
            a = v.conj().T @ t_matrix @ v
            r = a - a.T
            value = frobenius_norm(r) ** 2
        stalled = stalled + 1 if decrease < CERTIFY_STALL_TOL else 0
        if stalled >= CERTIFY_STALL_COUNT:
            break
        history.append(value)
        if len(history) == history.maxlen and np.sqrt(value) >= plateau_floor \
                and history[0] - value < CERTIFY_PLATEAU_TOL * history[0]:
            break
    return v, iterations


def _gradient(a, r):
    """Get 4·skew(A^*·R - R·A^*)."""
    g = a.conj().T @ r - r @ a.conj().T
    return 2.0 * (g - g.conj().T)


def _gauss_newton_direction(a, r):
    """Solve the linearized problem min ||R + L(X)||_F over skew-Hermitian X.

    L(X) = [A, X] - [A, X]^T is the first order change of A - A^T under
    V -> V·(I + X). The minimum norm least squares solution is taken over an
    orthonormal real basis of the skew-Hermitian matrices.
    """
    n = a.shape[0]
    first, second, first_coeff, second_coeff = _skew_hermitian_pairs(n)
    eye = identity(n)
    # row-major vec([A, X]) = (A ⊗ I - I ⊗ A^T)·vec(X)
    lin = np.kron(a, eye) - np.kron(eye, a.T)
    lin = lin - lin[_transpose_permutation(n), :]
    # every basis element has at most two non-zero entries
    jac = lin[:, first] * first_coeff + lin[:, second] * second_coeff
    rhs = r.reshape(-1)
    system = np.vstack((jac.real, jac.imag))
    target = -np.concatenate((rhs.real, rhs.imag))
    coeffs = np.linalg.lstsq(system, target, rcond=None)[0]
    return (_skew_hermitian_basis(n) @ coeffs).reshape(n, n)


@functools.lru_cache(maxsize=None)
def _skew_hermitian_basis(n):
    """Get the n^2 x n^2 matrix whose columns are an orthonormal skew-Hermitian basis.

    Each column is a row-major flattened matrix: (E_jk - E_kj)/sqrt(2) and
    i·(E_jk + E_kj)/sqrt(2) for j < k, then i·E_jj.
    """
    first, second, first_coeff, second_coeff = _skew_hermitian_pairs(n)
    basis = np.zeros((n * n, n * n), dtype=np.complex128)
    columns = np.arange(n * n)
    basis[first, columns] += first_coeff
    basis[second, columns] += second_coeff
    basis.setflags(write=False)
    return basis


@functools.lru_cache(maxsize=None)
def _skew_hermitian_pairs(n):
    """Get the sparse form of the skew-Hermitian basis.

    Returns:
        A tuple of four arrays, one entry per basis element: the row-major
        index of its first and second non-zero entry and the two values. The
        diagonal elements i·E_jj repeat their index with a zero second value.
    """
    first, second, first_coeff, second_coeff = [], [], [], []
    root = 1.0 / np.sqrt(2.0)
    for j in range(n):
        for k in range(j + 1, n):
            first.extend((j * n + k, j * n + k))
            second.extend((k * n + j, k * n + j))
            first_coeff.extend((root, 1j * root))
            second_coeff.extend((-root, 1j * root))
    for j in range(n):
        first.append(j * n + j)
        second.append(j * n + j)
        first_coeff.append(1j)
        second_coeff.append(0.0)
    pairs = (np.array(first, dtype=np.intp), np.array(second, dtype=np.intp),
             np.array(first_coeff, dtype=np.complex128),
             np.array(second_coeff, dtype=np.complex128))
    for array in pairs:
        array.setflags(write=False)
    return pairs


@functools.lru_cache(maxsize=None)
def _transpose_permutation(n):
    """Get the index array p with vec(Y^T) = vec(Y)[p] for row-major vec."""
    perm = np.arange(n * n).reshape(n, n).T.reshape(-1)
    perm.setflags(write=False)
    return perm


def _orthonormalize(v):
    """Get the Q factor of V = QR with a positive real diagonal in R."""
    q, r = np.linalg.qr(v)
    diag = np.diag(r)
    magnitude = np.abs(diag)
    phases = np.ones_like(diag)
    phases[magnitude > 0] = diag[magnitude > 0] / magnitude[magnitude > 0]
    return q * phases
