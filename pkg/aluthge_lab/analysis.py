# coding=utf-8
"""Build the analysis report of an operator and render it as text."""
from __future__ import division

import logging

import numpy as np

from .certify import CertifyPar, SymmetryVerdict, certify_cs
from .config import SIG_DIGITS
from .matrix import as_square_matrix
from .polar import polar_decompose, duggal, aluthge_t, mean_t, is_partial_isometry, \
    is_unitary
from .shift import cs_criterion, duggal_cs_criterion, aluthge_cs_criterion, \
    mean_cs_criterion, both_cs_criterion, duggal_weights, aluthge_weights, \
    mean_weights
from .structure import is_normal, is_quasinormal, is_binormal, is_centered, \
    is_hyponormal
from .util import matrix_to_rows, format_matrix, format_number, format_table, \
    header_line

_logger = logging.getLogger(__name__)

TRANSFORMS = ('polar-u', 'modulus', 'duggal', 'aluthge', 'mean')


def transform(t_matrix, name, t=0.5):
    """Get one of the matrices derived from the polar decomposition of T.

    Args:
        t_matrix: A square complex matrix.
        name: Text for the matrix to get. One of polar-u, modulus, duggal,
            aluthge and mean.
        t: The parameter of the generalized Aluthge transform (in [0, 1]) or
            of the generalized mean transform (in [0, 1/2]).
    """
    if name == 'polar-u':
        return polar_decompose(t_matrix).u
    if name == 'modulus':
        return polar_decompose(t_matrix).p
    if name == 'duggal':
        return duggal(t_matrix)
    if name == 'aluthge':
        return aluthge_t(t_matrix, t)
    if name == 'mean':
        return mean_t(t_matrix, t)
    raise ValueError('Transform "{}" is not recognized. Choose from: {}.'.format(
        name, ', '.join(TRANSFORMS)))


def safe_certify(t_matrix, certify_par=None):
    """Run certify_cs and turn numerical failures into an Inconclusive verdict."""
    par = certify_par if certify_par is not None else CertifyPar()
    try:
        return certify_cs(t_matrix, par)
    except np.linalg.LinAlgError as e:
        _logger.warning('Certifier failed and the verdict is inconclusive: %s', e)
        return SymmetryVerdict(SymmetryVerdict.INCONCLUSIVE, float('inf'), None, 0,
                               par.seed, par.tau_yes, par.tau_no)


def analyze(t_matrix, shift=None, t_values=(0.5,), certify_par=None):
    """Get a report dictionary describing an operator.

    Args:
        t_matrix: A square complex matrix. When a shift is given this should
            be its matrix.
        shift: An optional WeightedShift, which adds the closed-form criteria
            and the transform weights to the report.
        t_values: Parameters in [0, 1] for the generalized Aluthge transforms.
            The generalized mean transform is reported at min(t, 1 - t) since
            both parameters give the same matrix.
        certify_par: Optional CertifyPar for the certifier runs.

    Returns:
        A dictionary with the keys matrix, polar, transforms, structure and,
        for shifts, shift and criteria.
    """
    t_matrix = as_square_matrix(t_matrix, 'operator')
    t_values = sorted(set(float(t) for t in t_values))
    for t in t_values:
        if not 0.0 <= t <= 1.0:
            raise ValueError('Parameter t must be between 0 and 1. Got {}.'.format(t))
    par = certify_par if certify_par is not None else CertifyPar()
    parts = polar_decompose(t_matrix)

    def entry(matrix, criterion=None):
        verdict = safe_certify(matrix, par)
        result = {
            'matrix': matrix_to_rows(matrix),
            'status': verdict.status,
            'residual': _round(verdict.residual)
        }
        if criterion is not None:
            result['criterion'] = criterion
        return result

    transforms = {
        'operator': entry(t_matrix, cs_criterion(shift) if shift else None),
        'duggal': entry(duggal(t_matrix),
                        duggal_cs_criterion(shift) if shift else None)
    }
    for t in t_values:
        if t == 0.0:
            criterion = cs_criterion(shift) if shift else None
        else:
            criterion = aluthge_cs_criterion(shift, t) if shift else None
        transforms['aluthge[{}]'.format(_label(t))] = \
            entry(aluthge_t(t_matrix, t), criterion)
    for t in sorted(set(min(t, 1.0 - t) for t in t_values)):
        criterion = mean_cs_criterion(shift, t) if shift else None
        transforms['mean[{}]'.format(_label(t))] = entry(mean_t(t_matrix, t), criterion)

    binormal = is_binormal(t_matrix)

    report = {
        'type': 'AnalysisReport',
        'matrix': matrix_to_rows(t_matrix),
        'polar': {
            'u': matrix_to_rows(parts.u),
            'modulus': matrix_to_rows(parts.p),
            'rank': parts.rank,
            'partial_isometry': is_partial_isometry(parts.u),
            'unitary': is_unitary(parts.u)
        },
        'transforms': transforms,
        'structure': {
            'normal': is_normal(t_matrix),
            'quasinormal': is_quasinormal(t_matrix),
            'binormal': binormal,
            'centered': is_centered(t_matrix),
            'hyponormal': is_hyponormal(t_matrix)
        },
        'certify': par.to_dict()
    }
    if shift is not None:
        report['shift'] = shift.to_dict()
        report['criteria'] = _shift_criteria(shift, t_values)
    return report


def _shift_criteria(shift, t_values):
    """Get the closed-form criteria and transform weights of a shift."""
    criteria = {
        'cs': cs_criterion(shift),
        'duggal_cs': duggal_cs_criterion(shift),
        'both_cs': both_cs_criterion(shift),
        'moduli': [_round(m) for m in shift.moduli],
        'duggal_weights': [_round(w) for w in duggal_weights(shift)]
    }
    for t in t_values:
        label = _label(t)
        criteria['aluthge_weights[{}]'.format(label)] = \
            [_round(w) for w in aluthge_weights(shift, t)]
        if t > 0:
            criteria['aluthge_cs[{}]'.format(label)] = aluthge_cs_criterion(shift, t)
    for t in sorted(set(min(t, 1.0 - t) for t in t_values)):
        label = _label(t)
        criteria['mean_weights[{}]'.format(label)] = \
            [_round(w) for w in mean_weights(shift, t)]
        criteria['mean_cs[{}]'.format(label)] = mean_cs_criterion(shift, t)
    return criteria


def report_to_text(report):
    """Render an analysis report dictionary as human readable text."""
    lines = [header_line('Operator'), format_matrix(report['matrix'])]
    polar = report['polar']
    lines.append(header_line('Polar decomposition'))
    lines.append('U (rank {}, partial isometry: {}, unitary: {})'.format(
        polar['rank'], polar['partial_isometry'], polar['unitary']))
    lines.append(format_matrix(polar['u']))
    lines.append('|T|')
    lines.append(format_matrix(polar['modulus']))

    lines.append(header_line('Transforms'))
    rows = []
    for name, entry in report['transforms'].items():
        lines.append(name)
        lines.append(format_matrix(entry['matrix']))
        criterion = entry.get('criterion')
        rows.append((name, entry['status'], format_number(entry['residual'], 3),
                     '-' if criterion is None else criterion))
    lines.append('')
    lines.append(format_table(rows, ('matrix', 'verdict', 'residual', 'criterion')))

    if 'criteria' in report:
        lines.append(header_line('Shift criteria'))
        lines.append(format_table(
            [(key, value) for key, value in report['criteria'].items()],
            ('criterion', 'value')))

    lines.append(header_line('Structure'))
    lines.append(format_table(
        [(key, value) for key, value in report['structure'].items()],
        ('property', 'value')))
    return '\n'.join(lines)


def _label(t):
    """Get a short text label for a transform parameter."""
    return '{:g}'.format(t)


def _round(value, digits=SIG_DIGITS):
    """Round a float to a number of significant digits."""
    value = float(value)
    if not np.isfinite(value):
        return value
    return float('{:.{}g}'.format(value, digits))
