# coding=utf-8
"""Catalog of reproducible worked examples and counterexamples.

Every case builds its input matrices, measures a set of named quantities and
compares each one with an Expectation. Each expectation carries a provenance
marker: EXACT for values shown in a worked example, DERIVED for values that
follow from a direct computation and TRIVIAL for immediate consequences. EXACT
expectations also carry an anchor naming the worked example they come from.
"""
from __future__ import division

import logging

import numpy as np

from .certify import CertifyPar, SymmetryVerdict
from .analysis import safe_certify
from .config import TAU_YES, TAU_NO
from .conjugation import AntilinearMap, compose_antilinear, is_conjugation, \
    is_partial_conjugation, check_cs_with, partial_conjugation_from_polar, \
    extend_partial_conjugation
from .matrix import frobenius_norm, scale
from .polar import polar_decompose, duggal, aluthge, mean, is_partial_isometry, \
    is_unitary, is_aluthge_fixed_point
from .shift import WeightedShift, shift_matrix, cs_criterion, \
    duggal_cs_criterion, aluthge_cs_criterion, mean_cs_criterion, \
    both_cs_criterion, flip_conjugation
from .structure import is_binormal, binormal_defects, is_quasinormal, \
    quasinormal_defect, is_centered
from .util import format_number, matrix_to_rows

_logger = logging.getLogger(__name__)

EXACT = 'EXACT'
DERIVED = 'DERIVED'
TRIVIAL = 'TRIVIAL'
PROVENANCES = (EXACT, DERIVED, TRIVIAL)
COMPARISONS = ('eq', 'close', 'ge', 'le')

CS, NOT_CS = SymmetryVerdict.CS, SymmetryVerdict.NOT_CS


class Expectation(object):
    """An expected value for one measured quantity of a ReproCase.

    Args:
        quantity: Text for the name of the measured quantity.
        expected: The expected value. Booleans, text and integers are compared
            with eq. Numbers and matrices can be compared with close, ge or le.
        comparison: Text for the comparison. One of the following.

            * eq - observed == expected
            * close - ||observed - expected|| <= tolerance
            * ge - observed >= expected - tolerance
            * le - observed <= expected + tolerance

        tolerance: A non-negative number used by close, ge and le. (Default: 0).
        provenance: Text for the provenance marker (EXACT, DERIVED or TRIVIAL).
        anchor: Optional text naming the worked example an EXACT value comes
            from. A ReproCase fills it from its own anchor when missing.
    """
    __slots__ = ('quantity', 'expected', 'comparison', 'tolerance', 'provenance',
                 'anchor')

    def __init__(self, quantity, expected, comparison='eq', tolerance=0.0,
                 provenance=EXACT, anchor=None):
        """Initialize Expectation."""
        assert comparison in COMPARISONS, 'Comparison "{}" is not one of ' \
            '{}.'.format(comparison, ', '.join(COMPARISONS))
        assert provenance in PROVENANCES, 'Provenance "{}" is not one of ' \
            '{}.'.format(provenance, ', '.join(PROVENANCES))
        self.quantity = quantity
        self.expected = expected
        self.comparison = comparison
        self.tolerance = float(tolerance)
        self.provenance = provenance
        self.anchor = anchor

    def check(self, observed):
        """Get a boolean for whether an observed value meets the expectation."""
        if self.comparison == 'eq':
            return observed == self.expected
        if self.comparison == 'close':
            diff = np.asarray(observed, dtype=np.complex128) - \
                np.asarray(self.expected, dtype=np.complex128)
            return float(np.linalg.norm(diff)) <= self.tolerance
        if self.comparison == 'ge':
            return float(observed) >= float(self.expected) - self.tolerance
        return float(observed) <= float(self.expected) + self.tolerance

    def describe(self):
        """Get short text describing the expected value."""
        expected = _short(self.expected)
        if self.comparison == 'eq':
            return expected
        if self.comparison == 'close':
            return '{} (±{:g})'.format(expected, self.tolerance)
        symbol = '>=' if self.comparison == 'ge' else '<='
        return '{} {}'.format(symbol, expected)

    def __repr__(self):
        return 'Expectation: {} {}'.format(self.quantity, self.describe())


class ReproCase(object):
    """A reproducible example with its expectations.

    Args:
        identifier: Text for the unique case id.
        description: Text describing what the case demonstrates.
        builder: A function that accepts a CertifyPar and returns a
            dictionary of measured quantities.
        expectations: A list of Expectation objects, one per measured quantity
            that should be checked.
        anchor: Optional text naming the worked example the case reproduces.
            It is given to every EXACT expectation without an anchor of its
            own. Every EXACT expectation must end up with an anchor.
    """
    __slots__ = ('identifier', 'description', 'builder', 'expectations', 'anchor')

    def __init__(self, identifier, description, builder, expectations, anchor=None):
        """Initialize ReproCase."""
        self.identifier = identifier
        self.description = description
        self.builder = builder
        self.anchor = anchor
        for exp in expectations:
            if exp.provenance == EXACT and exp.anchor is None:
                exp.anchor = anchor
            assert exp.provenance != EXACT or exp.anchor, 'EXACT expectation ' \
                '"{}" of case "{}" has no anchor.'.format(exp.quantity, identifier)
        self.expectations = tuple(expectations)

    def run(self, certify_par=None):
        """Run the case and get a CaseResult."""
        par = certify_par if certify_par is not None else CertifyPar()
        observed = self.builder(par)
        checks = []
        for exp in self.expectations:
            value = observed[exp.quantity]
            checks.append((exp, value, bool(exp.check(value))))
        result = CaseResult(self, checks)
        _logger.info('repro case %s: %s', self.identifier,
                     'PASS' if result.passed else 'FAIL')
        return result

    def __repr__(self):
        return 'ReproCase: {}'.format(self.identifier)


class CaseResult(object):
    """The outcome of running a ReproCase.

    Args:
        case: The ReproCase that was run.
        checks: A list of (Expectation, observed value, passed) tuples.
    """
    __slots__ = ('case', 'checks')

    def __init__(self, case, checks):
        """Initialize CaseResult."""
        self.case = case
        self.checks = tuple(checks)

    @property
    def passed(self):
        """Get a boolean for whether every expectation was met."""
        return all(passed for _, _, passed in self.checks)

    @property
    def failures(self):
        """Get a list of the quantity names that did not meet their expectation."""
        return [exp.quantity for exp, _, passed in self.checks if not passed]

    def to_dict(self):
        """CaseResult dictionary representation."""
        return {
            'type': 'CaseResult',
            'id': self.case.identifier,
            'description': self.case.description,
            'passed': self.passed,
            'checks': [
                {
                    'quantity': exp.quantity,
                    'expected': exp.describe(),
                    'observed': _short(value),
                    'provenance': exp.provenance,
                    'anchor': exp.anchor,
                    'passed': passed
                } for exp, value, passed in self.checks
            ]
        }

    def __repr__(self):
        return 'CaseResult: {} {}'.format(
            self.case.identifier, 'PASS' if self.passed else 'FAIL')


def _short(value):
    """Get compact text for a quantity that may be a number or a matrix."""
    if isinstance(value, (bool, str, int, np.bool_, np.integer)):
        return str(value)
    array = np.asarray(value, dtype=np.complex128)
    if array.ndim == 0:
        return format_number(complex(array))
    return str(matrix_to_rows(array))


def _status(matrix, par):
    return safe_certify(matrix, par).status


def _residual_bound(matrix, tau):
    return tau * scale(matrix)


# --- shift(1, 2, 1): complex symmetric, binormal, with a non-CS Duggal transform

_SHIFT_121 = WeightedShift((1, 2, 1))
_T_121 = _SHIFT_121.to_matrix()


def _build_binormal_duggal(par):
    t_matrix = _T_121
    verdict = safe_certify(t_matrix, par)
    certificate_residual = float('inf')
    certificate_ok = False
    if verdict.certificate is not None:
        cert = AntilinearMap(verdict.certificate)
        certificate_ok = is_conjugation(cert)
        if certificate_ok:
            certificate_residual = check_cs_with(t_matrix, cert)
    squares, moduli = binormal_defects(t_matrix)
    t_duggal = duggal(t_matrix)
    duggal_verdict = safe_certify(t_duggal, par)
    return {
        'cs_criterion': cs_criterion(_SHIFT_121),
        'duggal_cs_criterion': duggal_cs_criterion(_SHIFT_121),
        'status': verdict.status,
        'certificate_is_conjugation': certificate_ok,
        'certificate_residual': certificate_residual,
        'flip_residual': check_cs_with(t_matrix, flip_conjugation(4)),
        'duggal_status': duggal_verdict.status,
        'duggal_residual': duggal_verdict.residual,
        'duggal_flip_residual': check_cs_with(t_duggal, flip_conjugation(4)),
        'binormal': is_binormal(t_matrix),
        'binormal_defect': max(squares, moduli)
    }


_BINORMAL_DUGGAL = ReproCase(
    'r1-duggal',
    'A binormal complex symmetric shift whose Duggal transform is not complex '
    'symmetric: shift(1, 2, 1).',
    _build_binormal_duggal,
    [
        Expectation('cs_criterion', True),
        Expectation('duggal_cs_criterion', False),
        Expectation('status', CS),
        Expectation('certificate_is_conjugation', True, provenance=DERIVED),
        Expectation('certificate_residual', _residual_bound(_T_121, TAU_YES), 'le',
                    provenance=DERIVED),
        Expectation('flip_residual', 0.0, 'close', 1e-12),
        Expectation('duggal_status', NOT_CS),
        Expectation('duggal_residual', _residual_bound(duggal(_T_121), TAU_NO),
                    'ge', provenance=DERIVED),
        Expectation('duggal_flip_residual', 0.5, 'ge', provenance=DERIVED),
        Expectation('binormal', True),
        Expectation('binormal_defect', 1e-10, 'le', provenance=DERIVED)
    ],
    'worked counterexample: shift (1, 2, 1) is complex symmetric with the '
    'flip conjugation and binormal while its Duggal transform is not complex '
    'symmetric'
)


def _build_nonunitary_polar_factor(par):
    parts = polar_decompose(_T_121)
    return {
        'u': parts.u,
        'rank': parts.rank,
        'partial_isometry': is_partial_isometry(parts.u),
        'unitary': is_unitary(parts.u),
        'reconstruction_error': frobenius_norm(parts.reconstruct() - _T_121)
    }


_NONUNITARY_POLAR_FACTOR = ReproCase(
    'r1-nonunitary-u',
    'The polar factor U of a complex symmetric shift is a partial isometry '
    'and not a unitary, so U need not be complex symmetric with the same '
    'conjugation as a unitary would.',
    _build_nonunitary_polar_factor,
    [
        Expectation('u', shift_matrix((1, 1, 1)), 'close', 1e-12),
        Expectation('rank', 3, provenance=DERIVED),
        Expectation('partial_isometry', True),
        Expectation('unitary', False),
        Expectation('reconstruction_error', 1e-12, 'le', provenance=TRIVIAL)
    ],
    'worked counterexample: the polar factor U of shift (1, 2, 1) is the '
    'unweighted shift, a partial isometry that is not unitary'
)


# --- conjugations attached to the polar decomposition of shift(1, 2, 1)

_PARTIAL_J = np.array([[0, 0, 0, 0],
                       [0, 0, 0, 1],
                       [0, 0, 1, 0],
                       [0, 1, 0, 0]], dtype=np.complex128)
_EXTENDED_J = _PARTIAL_J + np.diag([1, 0, 0, 0]).astype(np.complex128)
_CYCLIC = np.array([[0, 1, 0, 0],
                    [0, 0, 1, 0],
                    [0, 0, 0, 1],
                    [1, 0, 0, 0]], dtype=np.complex128)
_MODULUS_TIMES_CYCLIC = np.array([[0, 0, 0, 0],
                                  [0, 0, 1, 0],
                                  [0, 0, 0, 2],
                                  [1, 0, 0, 0]], dtype=np.complex128)
_DUGGAL_121 = np.array([[0, 0, 0, 0],
                        [0, 0, 1, 0],
                        [0, 0, 0, 2],
                        [0, 0, 0, 0]], dtype=np.complex128)


def _build_polar_extension(par):
    parts = polar_decompose(_T_121)
    flip = flip_conjugation(4)
    partial = partial_conjugation_from_polar(flip, parts.u)
    extended = extend_partial_conjugation(partial)
    flip_ext = compose_antilinear(flip, extended)
    modulus_flip_ext = parts.p @ flip_ext
    t_duggal = duggal(_T_121)
    return {
        'partial_conjugation': partial.matrix,
        'is_partial_conjugation': is_partial_conjugation(partial),
        'is_conjugation': is_conjugation(partial),
        'flip_times_partial': compose_antilinear(flip, partial),
        'extension': extended.matrix,
        'extension_is_conjugation': is_conjugation(extended),
        'flip_times_extension': flip_ext,
        'modulus_times_flip_extension': modulus_flip_ext,
        'duggal': t_duggal,
        'distance_to_duggal': frobenius_norm(modulus_flip_ext - t_duggal)
    }


_POLAR_EXTENSION = ReproCase(
    'r2-polar-extension',
    'The partial conjugation J = C·U of shift(1, 2, 1) with the flip C and its '
    'extension to a conjugation do not turn |T| into the Duggal transform.',
    _build_polar_extension,
    [
        Expectation('partial_conjugation', _PARTIAL_J, 'close', 1e-12),
        Expectation('is_partial_conjugation', True),
        Expectation('is_conjugation', False),
        Expectation('flip_times_partial', shift_matrix((1, 1, 1)), 'close', 1e-12),
        Expectation('extension', _EXTENDED_J, 'close', 1e-12),
        Expectation('extension_is_conjugation', True, provenance=TRIVIAL),
        Expectation('flip_times_extension', _CYCLIC, 'close', 1e-12),
        Expectation('modulus_times_flip_extension', _MODULUS_TIMES_CYCLIC,
                    'close', 1e-12),
        Expectation('duggal', _DUGGAL_121, 'close', 1e-12),
        Expectation('distance_to_duggal', 1.0, 'close', 1e-12, DERIVED)
    ],
    'displayed matrices for shift (1, 2, 1): C·J = U, C times the extension '
    'of J is cyclic and |T| times it differs from the Duggal transform'
)


# --- equal weights: T|T| = T but |T|T != T

_SHIFT_111 = WeightedShift((1, 1, 1))
_T_111 = _SHIFT_111.to_matrix()


def _build_quasinormal_equal_weights(par):
    modulus = polar_decompose(_T_111).p
    return {
        'right_product_error': frobenius_norm(_T_111 @ modulus - _T_111),
        'left_product_distance': frobenius_norm(modulus @ _T_111 - _T_111),
        'quasinormal': is_quasinormal(_T_111),
        'quasinormal_defect': quasinormal_defect(_T_111),
        'aluthge_fixed_point': is_aluthge_fixed_point(_T_111),
        'centered': is_centered(_T_111)
    }


_QUASINORMAL_EQUAL_WEIGHTS = ReproCase(
    'quasinormal-equal-weights',
    'The equal weight shift satisfies T|T| = T while |T|T differs from T, so '
    'it is not quasinormal.',
    _build_quasinormal_equal_weights,
    [
        Expectation('right_product_error', 0.0, 'close', 1e-12),
        Expectation('left_product_distance', 1.0, 'close', 1e-12, DERIVED),
        Expectation('quasinormal', False),
        Expectation('quasinormal_defect', 1.0, 'ge', 1e-12),
        Expectation('aluthge_fixed_point', False, provenance=DERIVED),
        Expectation('centered', True)
    ],
    'displayed products for the equal weight shift: T|T| = T while |T|T '
    'differs from T, so T is not quasinormal; weighted shifts are centered'
)


# --- n = 5: a non-CS shift with a CS Aluthge transform

_SHIFT_1212 = WeightedShift((1, 2, 1, 2))


def _build_aluthge_n5(par):
    t_matrix = _SHIFT_1212.to_matrix()
    return {
        'cs_criterion': cs_criterion(_SHIFT_1212),
        'aluthge_criterion': aluthge_cs_criterion(_SHIFT_1212, 0.5),
        'status': _status(t_matrix, par),
        'aluthge_status': _status(aluthge(t_matrix), par)
    }


_ALUTHGE_N5 = ReproCase(
    'aluthge-n5',
    'The shift with weight moduli (1, 2, 1, 2) is not complex symmetric but '
    'its Aluthge transform is.',
    _build_aluthge_n5,
    [
        Expectation('cs_criterion', False),
        Expectation('aluthge_criterion', True),
        Expectation('status', NOT_CS),
        Expectation('aluthge_status', CS)
    ],
    'worked example of dimension 5 with moduli (1, 2, 1, 2): the Aluthge '
    'transform is complex symmetric while the operator is not'
)


# --- n = 3: every Duggal transform is complex symmetric

def _build_duggal_n3(par):
    rng = np.random.default_rng(par.seed)
    shifts = []
    for _ in range(3):
        moduli = rng.uniform(0.5, 3.0, size=2)
        phases = np.exp(2j * np.pi * rng.uniform(size=2))
        shifts.append(WeightedShift(moduli * phases))
    return {
        'duggal_criteria': all(duggal_cs_criterion(s) for s in shifts),
        'duggal_statuses': ','.join(_status(duggal(s.to_matrix()), par)
                                    for s in shifts)
    }


_DUGGAL_N3 = ReproCase(
    'duggal-n3',
    'Three random shifts of dimension 3 all have complex symmetric Duggal '
    'transforms.',
    _build_duggal_n3,
    [
        Expectation('duggal_criteria', True),
        Expectation('duggal_statuses', ','.join([CS] * 3))
    ],
    'dimension 3 shifts are nilpotent of order 2, so every Duggal transform '
    'is complex symmetric'
)


# --- n = 4: equal weights give a non-CS mean transform

def _build_mean_n4(par):
    t_mean = mean(_T_111)
    return {
        'cs_criterion': cs_criterion(_SHIFT_111),
        'duggal_cs_criterion': duggal_cs_criterion(_SHIFT_111),
        'both_cs_criterion': both_cs_criterion(_SHIFT_111),
        'mean_cs_criterion': mean_cs_criterion(_SHIFT_111, 0.0),
        'mean': t_mean,
        'status': _status(_T_111, par),
        'duggal_status': _status(duggal(_T_111), par),
        'mean_status': _status(t_mean, par)
    }


_MEAN_N4 = ReproCase(
    'mean-n4',
    'The equal weight shift and its Duggal transform are complex symmetric '
    'but their mean transform is not.',
    _build_mean_n4,
    [
        Expectation('cs_criterion', True),
        Expectation('duggal_cs_criterion', True),
        Expectation('both_cs_criterion', True, provenance=TRIVIAL),
        Expectation('mean_cs_criterion', False),
        Expectation('mean', shift_matrix((0.5, 1, 1)), 'close', 1e-12),
        Expectation('status', CS),
        Expectation('duggal_status', CS),
        Expectation('mean_status', NOT_CS)
    ],
    'worked example of dimension 4 with equal weights: T and its Duggal '
    'transform are complex symmetric, the mean transform with weights '
    '(1/2, 1, 1) is not'
)


# --- n = 4: the mean transform is CS exactly when |l_1| = |l_2| + |l_3|

SURFACE_GRID = tuple(0.25 * k for k in range(1, 21))
SURFACE_SAMPLES = 50


def mean_surface_sweep(grid=SURFACE_GRID):
    """Compare the t = 0 mean criterion with the surface |l_1| = |l_2| + |l_3|.

    Args:
        grid: Positive moduli used for each of the three weights.

    Returns:
        A tuple with three elements.

        -   on_surface: A list of grid points on the surface.

        -   off_surface: A list of grid points off the surface.

        -   mismatches: A list of grid points where the criterion and the
            surface disagree.
    """
    on_surface, off_surface, mismatches = [], [], []
    for a in grid:
        for b in grid:
            for c in grid:
                surface = abs(a - (b + c)) <= 1e-9
                criterion = mean_cs_criterion(WeightedShift((a, b, c)), 0.0)
                (on_surface if surface else off_surface).append((a, b, c))
                if criterion != surface:
                    mismatches.append((a, b, c))
    return on_surface, off_surface, mismatches


def _build_mean_n4_surface(par):
    on_surface, off_surface, mismatches = mean_surface_sweep()
    rng = np.random.default_rng(par.seed)
    half = SURFACE_SAMPLES // 2
    picks = [on_surface[i] for i in rng.choice(len(on_surface), half, replace=False)]
    picks += [off_surface[i] for i in
              rng.choice(len(off_surface), SURFACE_SAMPLES - half, replace=False)]
    disagreements, inconclusive = 0, 0
    for point in picks:
        shift = WeightedShift(point)
        status = _status(mean(shift.to_matrix()), par)
        if status == SymmetryVerdict.INCONCLUSIVE:
            inconclusive += 1
        elif (status == CS) != mean_cs_criterion(shift, 0.0):
            disagreements += 1
    return {
        'grid_points': len(on_surface) + len(off_surface),
        'surface_points': len(on_surface),
        'criterion_mismatches': len(mismatches),
        'certifier_disagreements': disagreements,
        'certifier_inconclusive': inconclusive
    }


_MEAN_N4_SURFACE = ReproCase(
    'mean-n4-criterion',
    'On a 20x20x20 grid of weight moduli the mean transform of a dimension 4 '
    'shift is complex symmetric exactly when |l_1| = |l_2| + |l_3|.',
    _build_mean_n4_surface,
    [
        Expectation('grid_points', 8000, provenance=TRIVIAL),
        Expectation('surface_points', 1, 'ge', provenance=TRIVIAL),
        Expectation('criterion_mismatches', 0),
        Expectation('certifier_disagreements', 0, provenance=DERIVED),
        Expectation('certifier_inconclusive', 0, provenance=DERIVED)
    ],
    'dimension 4 mean transform: complex symmetric if and only if '
    '|l_1| = |l_2| + |l_3|'
)


# --- n = 4..7: equal weights never give a CS mean transform

def _build_mean_general_n(par):
    criteria, statuses, pairs = [], [], []
    for n in range(4, 8):
        shift = WeightedShift([1.0] * (n - 1))
        t_matrix = shift.to_matrix()
        criteria.append(mean_cs_criterion(shift, 0.0))
        statuses.append(_status(mean(t_matrix), par))
        pairs.append(_status(t_matrix, par) == CS and
                     _status(duggal(t_matrix), par) == CS)
    return {
        'mean_criteria': any(criteria),
        'mean_statuses': ','.join(statuses),
        'operator_and_duggal_cs': all(pairs)
    }


_MEAN_GENERAL_N = ReproCase(
    'mean-general-n',
    'For the equal weight shifts of dimension 4 to 7 the operator and its '
    'Duggal transform are complex symmetric while the mean transform is not.',
    _build_mean_general_n,
    [
        Expectation('mean_criteria', False, provenance=DERIVED),
        Expectation('mean_statuses', ','.join([NOT_CS] * 4), provenance=DERIVED),
        Expectation('operator_and_duggal_cs', True, provenance=DERIVED)
    ]
)


def _build_centered(par):
    return {
        'shift_121': is_centered(_T_121),
        'shift_1111': is_centered(WeightedShift((1, 1, 1, 1)).to_matrix())
    }


_CENTERED = ReproCase(
    'centered',
    'Weighted shifts are centered operators.',
    _build_centered,
    [
        Expectation('shift_121', True),
        Expectation('shift_1111', True)
    ],
    'weighted shifts are centered operators'
)


CASES = (
    _BINORMAL_DUGGAL, _NONUNITARY_POLAR_FACTOR, _POLAR_EXTENSION,
    _QUASINORMAL_EQUAL_WEIGHTS, _ALUTHGE_N5, _DUGGAL_N3, _MEAN_N4,
    _MEAN_N4_SURFACE, _MEAN_GENERAL_N, _CENTERED
)
CASE_IDS = tuple(case.identifier for case in CASES)


def get_case(identifier):
    """Get a ReproCase from its id."""
    for case in CASES:
        if case.identifier == identifier:
            return case
    raise ValueError('Repro case "{}" is not recognized. Choose from: {}.'.format(
        identifier, ', '.join(CASE_IDS)))


def run_case(identifier, certify_par=None):
    """Run a single repro case by id and get its CaseResult."""
    return get_case(identifier).run(certify_par)


def run_all(certify_par=None):
    """Run every repro case in catalog order and get a list of CaseResults."""
    return [case.run(certify_par) for case in CASES]
