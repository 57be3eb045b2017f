# coding=utf-8
"""Randomized property suite tying the closed-form shift criteria to the numerics.

Every case is a seeded random weighted shift. The properties compare the
closed-form criteria with the certifier run on the transform matrices, with
each other and with the unimodular gauge. Four more properties check the
certifier itself on the same shifts: its certificates, its invariance under
unitary similarity, the residual identity for J = V·V^T and its gradient.
A mutation replaces one criterion with a deliberately wrong variant so the
suite can be checked for its power to catch mistakes.
"""
from __future__ import division

import logging

import numpy as np

from .analysis import safe_certify
from .certify import CertifyPar, SymmetryVerdict, objective, riemannian_gradient, \
    cayley, random_unitary
from .config import CRITERION_TOL
from .conjugation import AntilinearMap, is_conjugation, check_cs_with
from .matrix import frobenius_norm, scale
from .polar import duggal, aluthge_t, mean_t
from .shift import WeightedShift, shift_matrix, cs_criterion, \
    duggal_cs_criterion, aluthge_cs_criterion, mean_cs_criterion, \
    both_cs_criterion, duggal_weights, aluthge_weights, mean_weights

_logger = logging.getLogger(__name__)

ALUTHGE_T = (0.25, 0.5, 0.75, 1.0)
MEAN_T = (0.0, 0.25, 0.5)
IMPLIED_MEAN_T = (0.1, 0.25, 0.5)
EQUIVARIANCE_TOL = 1e-9
TRANSFER_TOL = 1e-9  # residual identity, relative to (1 + ||A - A^T||_F)
GRADIENT_EPS = 1e-6  # central difference step along a unit skew-Hermitian direction
GRADIENT_TOL = 1e-5  # relative agreement of gradient and central difference
PROPERTIES = (
    'criterion-oracle', 'gauge-invariance', 'gauge-equivariance',
    'derived-weights', 'cs-implies-transforms', 'aluthge-endpoint', 'both-cs',
    'n3-duggal', 'certificate-validity', 'unitary-invariance',
    'residual-transfer', 'gradient-check'
)


def _moduli(shift):
    return shift.moduli


def _cs_index_offset(shift, tol=CRITERION_TOL):
    """Compare |l_i| with |l_{n-1-i}| instead of |l_{n-i}|."""
    moduli = _moduli(shift)[:-1]
    return all(abs(a - b) <= tol * max(a, b) for a, b in zip(moduli, moduli[::-1]))


def _duggal_full_range(shift, tol=CRITERION_TOL):
    """Run the Duggal comparison over 1 <= i <= n-1."""
    moduli = _moduli(shift)
    return all(abs(a - b) <= tol * max(a, b) for a, b in zip(moduli, moduli[::-1]))


def _aluthge_swapped_exponents(shift, t, tol=CRITERION_TOL):
    """Use |l_i|^(1-t)·|l_{i+1}|^t in place of |l_i|^t·|l_{i+1}|^(1-t)."""
    moduli = _moduli(shift)
    products = [moduli[i] ** (1.0 - t) * moduli[i + 1] ** t
                for i in range(len(moduli) - 1)]
    return all(abs(a - b) <= tol * max(a, b)
               for a, b in zip(products, products[::-1]))


def _mean_drop_first_weight(shift, t, tol=CRITERION_TOL):
    """Leave the first mean weight |l_1|/2 out of the t = 0 comparison."""
    if t > 0:
        return mean_cs_criterion(shift, t, tol)
    weights = mean_weights(shift, 0.0)[1:]
    return all(abs(a - b) <= tol * max(a, b) for a, b in zip(weights, weights[::-1]))


MUTATIONS = {
    'cs-index-offset': ('cs', _cs_index_offset),
    'duggal-full-range': ('duggal', _duggal_full_range),
    'aluthge-swapped-exponents': ('aluthge', _aluthge_swapped_exponents),
    'mean-drop-first-weight': ('mean', _mean_drop_first_weight)
}


def criteria_table(mutation=None):
    """Get the dictionary of criteria used by the suite with an optional mutation.

    Args:
        mutation: Optional text for a key of MUTATIONS.
    """
    table = {
        'cs': cs_criterion,
        'duggal': duggal_cs_criterion,
        'aluthge': aluthge_cs_criterion,
        'mean': mean_cs_criterion
    }
    if mutation is not None:
        if mutation not in MUTATIONS:
            raise ValueError('Mutation "{}" is not recognized. Choose from: '
                             '{}.'.format(mutation, ', '.join(sorted(MUTATIONS))))
        key, func = MUTATIONS[mutation]
        table[key] = func
    return table


def random_shift(rng, min_n=3, max_n=8, moduli=(1, 2, 3)):
    """Draw a random weighted shift with moduli from a set and random phases.

    A third of the draws mirror their moduli so that the shift is complex
    symmetric and another third use a single modulus, which keeps the CS
    branches of every criterion exercised.
    """
    n = int(rng.integers(min_n, max_n + 1))
    count = n - 1
    kind = int(rng.integers(3))
    values = rng.choice(moduli, size=count).astype(np.float64)
    if kind == 1:
        values = np.where(np.arange(count) < count - 1 - np.arange(count),
                          values, values[::-1])
    elif kind == 2:
        values[:] = values[0]
    phases = np.exp(2j * np.pi * rng.uniform(size=count))
    return WeightedShift(values * phases)


def _transforms(t_matrix):
    """Get (label, matrix, criterion key, parameter) for every checked transform."""
    items = [('operator', t_matrix, 'cs', None),
             ('duggal', duggal(t_matrix), 'duggal', None)]
    items += [('aluthge[{:g}]'.format(t), aluthge_t(t_matrix, t), 'aluthge', t)
              for t in ALUTHGE_T]
    items += [('mean[{:g}]'.format(t), mean_t(t_matrix, t), 'mean', t)
              for t in MEAN_T]
    return items


def _criterion(table, key, shift, t):
    return table[key](shift) if t is None else table[key](shift, t)


def _check_oracle(shift, table, par):
    t_matrix = shift.to_matrix()
    bound = EQUIVARIANCE_TOL * scale(t_matrix)
    certified = []
    for label, matrix, key, t in _transforms(t_matrix):
        expected = _criterion(table, key, shift, t)
        # coinciding transforms such as aluthge[1] and duggal share a verdict
        verdict = next((v for m, v in certified
                        if frobenius_norm(m - matrix) <= bound), None)
        if verdict is None:
            verdict = safe_certify(matrix, par)
            certified.append((matrix, verdict))
        if verdict.status == SymmetryVerdict.INCONCLUSIVE or \
                verdict.is_cs != expected:
            return {'transform': label, 'criterion': expected,
                    'status': verdict.status, 'residual': verdict.residual}
    return None


def _check_gauge_invariance(shift, table):
    _, gauged = shift.unimodular_gauge()
    checks = [('cs', None), ('duggal', None)] + \
        [('aluthge', t) for t in ALUTHGE_T] + [('mean', t) for t in MEAN_T]
    for key, t in checks:
        if _criterion(table, key, shift, t) != _criterion(table, key, gauged, t):
            return {'criterion': key, 't': t}
    return None


def _check_gauge_equivariance(shift):
    gauge, gauged = shift.unimodular_gauge()
    t_matrix, t_gauged = shift.to_matrix(), gauged.to_matrix()
    bound = EQUIVARIANCE_TOL * scale(t_matrix)
    if frobenius_norm(gauge.conj().T @ t_matrix @ gauge - t_gauged) > bound:
        return {'transform': 'operator'}
    for (label, matrix, _, _), (_, gauged_matrix, _, _) in \
            zip(_transforms(t_matrix), _transforms(t_gauged)):
        if frobenius_norm(gauge.conj().T @ matrix @ gauge - gauged_matrix) > bound:
            return {'transform': label}
    return None


def _check_derived_weights(shift):
    _, gauged = shift.unimodular_gauge()
    t_gauged = gauged.to_matrix()
    bound = EQUIVARIANCE_TOL * scale(t_gauged)
    pairs = [('duggal', duggal(t_gauged), duggal_weights(shift))]
    pairs += [('aluthge[{:g}]'.format(t), aluthge_t(t_gauged, t),
               aluthge_weights(shift, t)) for t in ALUTHGE_T]
    pairs += [('mean[{:g}]'.format(t), mean_t(t_gauged, t), mean_weights(shift, t))
              for t in MEAN_T]
    for label, matrix, weights in pairs:
        if frobenius_norm(matrix - shift_matrix(weights)) > bound:
            return {'transform': label}
    return None


def _check_cs_implies(shift, table):
    if not table['cs'](shift):
        return None
    if not table['aluthge'](shift, 0.5):
        return {'criterion': 'aluthge', 't': 0.5}
    for t in IMPLIED_MEAN_T:
        if not table['mean'](shift, t):
            return {'criterion': 'mean', 't': t}
    return None


def _check_endpoint(shift, table):
    if table['aluthge'](shift, 1.0) != table['duggal'](shift):
        return {'aluthge[1]': table['aluthge'](shift, 1.0),
                'duggal': table['duggal'](shift)}
    return None


def _check_both(shift, table):
    moduli = shift.moduli
    equal = max(moduli) - min(moduli) <= CRITERION_TOL * max(moduli)
    both = both_cs_criterion(shift)
    combined = table['cs'](shift) and table['duggal'](shift)
    if not both == combined == equal:
        return {'both_cs': both, 'cs_and_duggal': combined, 'all_equal': equal}
    return None


def _check_n3_duggal(shift, table, par):
    small = WeightedShift(shift.weights[:2])
    if not table['duggal'](small):
        return {'shift': small.to_dict(), 'criterion': False}
    verdict = safe_certify(duggal(small.to_matrix()), par)
    if not verdict.is_cs:
        return {'shift': small.to_dict(), 'status': verdict.status}
    return None


def _check_certificate(shift, par):
    if not cs_criterion(shift):
        return None
    t_matrix = shift.to_matrix()
    verdict = safe_certify(t_matrix, par)
    if not verdict.is_cs:
        return {'status': verdict.status, 'residual': verdict.residual}
    certificate = AntilinearMap(verdict.certificate)
    if not is_conjugation(certificate):
        return {'status': verdict.status, 'conjugation': False}
    residual = check_cs_with(t_matrix, certificate)
    if residual > 2 * par.tau_yes * scale(t_matrix):
        return {'status': verdict.status, 'certificate_residual': residual}
    return None


def _check_unitary_invariance(shift, par, rng):
    t_matrix = shift.to_matrix()
    q = random_unitary(shift.n, rng)
    status = safe_certify(t_matrix, par).status
    similar = safe_certify(q.conj().T @ t_matrix @ q, par).status
    if status != similar:
        return {'status': status, 'similar_status': similar}
    return None


def _check_residual_transfer(shift, rng):
    t_matrix = shift.to_matrix()
    v = random_unitary(shift.n, rng)
    expected = float(np.sqrt(objective(t_matrix, v)))
    residual = check_cs_with(t_matrix, AntilinearMap(v @ v.T))
    if abs(residual - expected) > TRANSFER_TOL * (1.0 + expected):
        return {'residual': residual, 'expected': expected}
    return None


def _check_gradient(shift, rng):
    t_matrix = shift.to_matrix()
    n = shift.n
    v = random_unitary(n, rng)
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    x = (z - z.conj().T) / 2
    x = x / frobenius_norm(x)
    analytic = float(np.real(np.sum(riemannian_gradient(t_matrix, v).conj() * x)))
    numeric = (objective(t_matrix, v @ cayley(GRADIENT_EPS * x)) -
               objective(t_matrix, v @ cayley(-GRADIENT_EPS * x))) / (2 * GRADIENT_EPS)
    if abs(numeric - analytic) > GRADIENT_TOL * (1.0 + abs(analytic)):
        return {'analytic': analytic, 'numeric': numeric}
    return None


def run_suite(seed=1, n_cases=100, certify_par=None, mutation=None, properties=None):
    """Run the randomized property suite.

    Args:
        seed: Integer seed for drawing the random shifts.
        n_cases: Number of random shifts.
        certify_par: Optional CertifyPar for the certifier runs.
        mutation: Optional text for a key of MUTATIONS that replaces one
            criterion with a wrong variant.
        properties: Optional list of property names to run. (Default: all).

    Returns:
        A dictionary that is identical for identical inputs with the
        pass/fail status, the number of checked cases and the first
        counterexample of each property.
    """
    par = certify_par if certify_par is not None else CertifyPar()
    table = criteria_table(mutation)
    properties = PROPERTIES if properties is None else tuple(properties)
    for prop in properties:
        assert prop in PROPERTIES, 'Property "{}" is not recognized. Choose ' \
            'from: {}.'.format(prop, ', '.join(PROPERTIES))

    checks = {
        'criterion-oracle': lambda s, r: _check_oracle(s, table, par),
        'gauge-invariance': lambda s, r: _check_gauge_invariance(s, table),
        'gauge-equivariance': lambda s, r: _check_gauge_equivariance(s),
        'derived-weights': lambda s, r: _check_derived_weights(s),
        'cs-implies-transforms': lambda s, r: _check_cs_implies(s, table),
        'aluthge-endpoint': lambda s, r: _check_endpoint(s, table),
        'both-cs': lambda s, r: _check_both(s, table),
        'n3-duggal': lambda s, r: _check_n3_duggal(s, table, par),
        'certificate-validity': lambda s, r: _check_certificate(s, par),
        'unitary-invariance': lambda s, r: _check_unitary_invariance(s, par, r),
        'residual-transfer': _check_residual_transfer,
        'gradient-check': _check_gradient
    }
    results = {prop: {'checked': 0, 'failures': 0, 'counterexample': None}
               for prop in properties}

    rng = np.random.default_rng(seed)
    for index in range(int(n_cases)):
        shift = random_shift(rng)
        for prop in properties:
            result = results[prop]
            # one random stream per seed, case and property
            case_rng = np.random.default_rng(
                (int(seed), index, PROPERTIES.index(prop)))
            detail = checks[prop](shift, case_rng)
            result['checked'] += 1
            if detail is not None:
                result['failures'] += 1
                if result['counterexample'] is None:
                    detail['shift'] = detail.get('shift', shift.to_dict())
                    detail['case'] = index
                    result['counterexample'] = detail
        _logger.info('suite case %d of %d done', index + 1, n_cases)

    for prop in properties:
        results[prop]['passed'] = results[prop]['failures'] == 0
    return {
        'type': 'SuiteReport',
        'seed': int(seed),
        'cases': int(n_cases),
        'mutation': mutation,
        'certify': par.to_dict(),
        'properties': results,
        'passed': all(r['passed'] for r in results.values())
    }
