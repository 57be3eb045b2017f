# coding=utf-8
import numpy as np
import pytest

from aluthge_lab.certify import CertifyPar
from aluthge_lab.repro import Expectation, ReproCase, CaseResult, CASES, \
    CASE_IDS, SURFACE_GRID, get_case, run_case, mean_surface_sweep, EXACT, DERIVED

PAR = CertifyPar(restarts=8)


def test_expectation_check():
    """Test each comparison of Expectation."""
    assert Expectation('x', True).check(True)
    assert not Expectation('x', 'CS').check('NotCS')
    assert Expectation('x', 1.0, 'close', 1e-9).check(1.0 + 1e-12)
    assert Expectation('x', np.eye(2), 'close', 1e-9).check(np.eye(2))
    assert not Expectation('x', np.eye(2), 'close', 1e-9).check(np.zeros((2, 2)))
    assert Expectation('x', 0.5, 'ge').check(0.7)
    assert not Expectation('x', 0.5, 'ge').check(0.4)
    assert Expectation('x', 1e-10, 'le').check(0.0)
    with pytest.raises(AssertionError):
        Expectation('x', 1, 'lt')
    with pytest.raises(AssertionError):
        Expectation('x', 1, provenance='GUESS')


def test_expectation_describe():
    """Test the text description of an Expectation."""
    assert Expectation('x', True).describe() == 'True'
    assert Expectation('x', 0.5, 'ge').describe() == '>= 0.5'
    assert Expectation('x', 1.0, 'close', 1e-12, DERIVED).describe() == '1 (±1e-12)'
    assert str(Expectation('x', 2, 'le')) == 'Expectation: x <= 2'


def test_case_catalog():
    """Test the ids of the catalog and the lookup of cases."""
    assert CASE_IDS == (
        'r1-duggal', 'r1-nonunitary-u', 'r2-polar-extension',
        'quasinormal-equal-weights', 'aluthge-n5', 'duggal-n3', 'mean-n4',
        'mean-n4-criterion', 'mean-general-n', 'centered')
    assert len(set(CASE_IDS)) == len(CASES)
    assert get_case('mean-n4').identifier == 'mean-n4'
    with pytest.raises(ValueError):
        get_case('binormal-duggal')


def test_custom_case():
    """Test running a ReproCase built from a custom builder."""
    case = ReproCase('custom', 'A failing case.', lambda par: {'a': 1, 'b': 2.0},
                     [Expectation('a', 1, provenance=EXACT),
                      Expectation('b', 1.0, 'le', anchor='custom table')],
                     'custom display')
    result = case.run()
    assert isinstance(result, CaseResult)
    assert not result.passed
    assert result.failures == ['b']
    result_dict = result.to_dict()
    assert result_dict['id'] == 'custom'
    assert [c['passed'] for c in result_dict['checks']] == [True, False]
    assert result_dict['checks'][1]['observed'] == '2'
    assert [c['anchor'] for c in result_dict['checks']] == \
        ['custom display', 'custom table']


def test_case_anchors():
    """Test that EXACT expectations need an anchor and that the catalog has them."""
    with pytest.raises(AssertionError):
        ReproCase('bare', 'No anchor.', lambda par: {'a': 1}, [Expectation('a', 1)])
    derived = ReproCase('derived', 'Derived only.', lambda par: {'a': 1},
                        [Expectation('a', 1, provenance=DERIVED)])
    assert derived.expectations[0].anchor is None
    for case in CASES:
        for exp in case.expectations:
            assert exp.provenance != EXACT or exp.anchor, (case.identifier, exp.quantity)
    assert 'Duggal transform' in get_case('r1-duggal').anchor


@pytest.mark.parametrize('identifier', [
    'r1-nonunitary-u', 'r2-polar-extension', 'quasinormal-equal-weights',
    'centered'])
def test_exact_cases(identifier):
    """Test the cases that do not need the certifier."""
    result = run_case(identifier, PAR)
    assert result.passed, result.failures


@pytest.mark.parametrize('identifier', [
    'r1-duggal', 'aluthge-n5', 'duggal-n3', 'mean-n4', 'mean-general-n'])
def test_certified_cases(identifier):
    """Test the cases whose expectations include certifier verdicts."""
    result = run_case(identifier, PAR)
    assert result.passed, result.failures


def test_mean_surface_sweep():
    """Test the grid sweep of the mean criterion against its surface."""
    assert len(SURFACE_GRID) == 20
    on_surface, off_surface, mismatches = mean_surface_sweep()
    assert len(on_surface) + len(off_surface) == 8000
    assert len(on_surface) == 190
    assert mismatches == []
    small_on, small_off, _ = mean_surface_sweep((1.0, 2.0))
    assert small_on == [(2.0, 1.0, 1.0)]
    assert len(small_off) == 7


def test_mean_n4_surface_case():
    """Test the certifier on the sampled points of the mean surface."""
    result = run_case('mean-n4-criterion', PAR)
    assert result.passed, result.failures
