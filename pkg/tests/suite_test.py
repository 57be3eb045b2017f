# coding=utf-8
import numpy as np
import pytest

from aluthge_lab.certify import CertifyPar
from aluthge_lab.shift import WeightedShift, cs_criterion, duggal_cs_criterion, \
    aluthge_cs_criterion, mean_cs_criterion
from aluthge_lab.suite import PROPERTIES, MUTATIONS, criteria_table, random_shift, \
    run_suite

CHEAP = ['gauge-invariance', 'gauge-equivariance', 'derived-weights',
         'cs-implies-transforms', 'aluthge-endpoint', 'both-cs']


def test_criteria_table():
    """Test the criteria table with and without a mutation."""
    table = criteria_table()
    assert table['cs'] is cs_criterion
    assert table['duggal'] is duggal_cs_criterion
    assert table['aluthge'] is aluthge_cs_criterion
    assert table['mean'] is mean_cs_criterion
    assert criteria_table('cs-index-offset')['cs'] is MUTATIONS['cs-index-offset'][1]
    with pytest.raises(ValueError):
        criteria_table('off-by-two')


def test_mutations_differ():
    """Test that every mutation disagrees with its criterion on some shift."""
    shift = WeightedShift((1, 2, 1))
    assert cs_criterion(shift)
    assert not criteria_table('cs-index-offset')['cs'](shift)
    shift = WeightedShift((2, 1, 1, 2))
    assert not duggal_cs_criterion(shift)
    assert criteria_table('duggal-full-range')['duggal'](shift)
    shift = WeightedShift((1, 2, 2))
    assert not aluthge_cs_criterion(shift, 1.0)
    assert criteria_table('aluthge-swapped-exponents')['aluthge'](shift, 1.0)
    shift = WeightedShift((1, 1, 1))
    assert not mean_cs_criterion(shift, 0.0)
    assert criteria_table('mean-drop-first-weight')['mean'](shift, 0.0)


def test_random_shift():
    """Test the draws of random shifts."""
    rng = np.random.default_rng(0)
    for _ in range(30):
        shift = random_shift(rng)
        assert 3 <= shift.n <= 8
        assert all(round(m, 9) in (1, 2, 3) for m in shift.moduli)
    first = random_shift(np.random.default_rng(5))
    assert first == random_shift(np.random.default_rng(5))


def test_run_suite_cheap_properties():
    """Test the properties that do not need the certifier."""
    report = run_suite(seed=1, n_cases=200, properties=CHEAP)
    assert report['type'] == 'SuiteReport'
    assert report['passed']
    assert sorted(report['properties']) == sorted(CHEAP)
    for result in report['properties'].values():
        assert result['checked'] == 200
        assert result['failures'] == 0
        assert result['counterexample'] is None


def test_run_suite_deterministic():
    """Test that identical inputs give identical reports."""
    properties = CHEAP + ['residual-transfer']
    first = run_suite(seed=7, n_cases=10, properties=properties)
    second = run_suite(seed=7, n_cases=10, properties=properties)
    assert first == second


def test_run_suite_certifier_properties():
    """Test the properties that compare criteria with certifier verdicts."""
    par = CertifyPar(restarts=8)
    report = run_suite(seed=1, n_cases=2, certify_par=par,
                       properties=['criterion-oracle', 'n3-duggal'])
    assert report['passed'], report['properties']
    assert report['certify']['restarts'] == 8


def test_run_suite_n3_duggal():
    """Test that every dimension 3 Duggal transform is certified complex symmetric."""
    report = run_suite(seed=2, n_cases=200, certify_par=CertifyPar(restarts=8),
                       properties=['n3-duggal'])
    assert report['passed'], report['properties']
    assert report['properties']['n3-duggal']['checked'] == 200


def test_run_suite_certifier_checks():
    """Test the properties of the certifier itself on random shifts."""
    checks = ['certificate-validity', 'unitary-invariance', 'residual-transfer',
              'gradient-check']
    report = run_suite(seed=3, n_cases=4, certify_par=CertifyPar(restarts=8),
                       properties=checks)
    assert report['passed'], report['properties']
    assert sorted(report['properties']) == sorted(checks)
    cheap = run_suite(seed=3, n_cases=200,
                      properties=['residual-transfer', 'gradient-check'])
    assert cheap['passed'], cheap['properties']


@pytest.mark.slow
def test_run_suite_oracle_full_scale():
    """Test the criterion and certifier agreement on 500 random shifts."""
    report = run_suite(seed=1, n_cases=500, properties=['criterion-oracle'])
    result = report['properties']['criterion-oracle']
    assert result['checked'] == 500
    assert result['failures'] == 0, result['counterexample']


def test_run_suite_mutation():
    """Test that a mutated criterion makes the suite fail with a counterexample."""
    report = run_suite(seed=1, n_cases=50, mutation='aluthge-swapped-exponents',
                       properties=['aluthge-endpoint'])
    assert report['mutation'] == 'aluthge-swapped-exponents'
    assert not report['passed']
    result = report['properties']['aluthge-endpoint']
    assert result['failures'] >= 1
    counterexample = result['counterexample']
    assert counterexample['shift']['type'] == 'WeightedShift'
    assert 0 <= counterexample['case'] < 50


def test_run_suite_invalid_property():
    """Test that unknown property names are rejected."""
    assert len(PROPERTIES) == 12
    with pytest.raises(AssertionError):
        run_suite(n_cases=1, properties=['fast'])
