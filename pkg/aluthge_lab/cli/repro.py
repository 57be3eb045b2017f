"""aluthge-lab commands that reproduce the worked examples and run the property suite."""
import click
import sys
import json
import logging

from aluthge_lab.certify import CertifyPar
from aluthge_lab.config import CERTIFY_RESTARTS, CERTIFY_WORKERS
from aluthge_lab.repro import CASE_IDS, run_all, run_case
from aluthge_lab.suite import MUTATIONS, PROPERTIES, run_suite
from aluthge_lab.util import format_table, header_line

from .analyze import certify_options, format_option

_logger = logging.getLogger(__name__)


def _results_text(results):
    lines = []
    for result in results:
        lines.append(header_line('{} - {}'.format(
            result.case.identifier, 'PASS' if result.passed else 'FAIL')))
        lines.append(result.case.description)
        rows = [(d['quantity'], d['expected'], d['observed'], d['provenance'],
                 'ok' if d['passed'] else 'MISMATCH')
                for d in result.to_dict()['checks']]
        lines.append(format_table(
            rows, ('quantity', 'expected', 'observed', 'source', 'result')))
        anchors = []
        for exp, _, _ in result.checks:
            if exp.anchor and exp.anchor not in anchors:
                anchors.append(exp.anchor)
        lines.extend('EXACT: {}'.format(anchor) for anchor in anchors)
    passed = sum(1 for r in results if r.passed)
    lines.append('{} of {} cases passed.'.format(passed, len(results)))
    return '\n'.join(lines)


@click.command('repro')
@click.argument('case-id', required=False, default=None, type=str)
@click.option(
    '--all', '-a', 'run_every', help='Flag to run every case in the catalog.',
    is_flag=True, default=False)
@certify_options
@format_option
def repro(case_id, run_every, seed, restarts, workers, output_format, output_file):
    """Reproduce a worked example and compare it with its expectations.

    The command exits with code 1 when any expectation is not met.

    \b
    Args:
        case_id: The id of the case to run. Omit it when using --all.
    """
    if run_every == (case_id is not None):
        raise click.UsageError('Give either a CASE_ID or --all. Known cases: '
                               '{}.'.format(', '.join(CASE_IDS)))
    if case_id is not None and case_id not in CASE_IDS:
        raise click.UsageError('Unknown case "{}". Known cases: {}.'.format(
            case_id, ', '.join(CASE_IDS)))
    try:
        par = CertifyPar(seed=seed, restarts=restarts, workers=workers)
        results = run_all(par) if run_every else [run_case(case_id, par)]
        if output_format == 'report':
            report = {
                'type': 'ReproReport',
                'passed': all(r.passed for r in results),
                'cases': [r.to_dict() for r in results]
            }
            output_file.write(json.dumps(report, sort_keys=True, indent=2))
        else:
            output_file.write(_results_text(results))
        output_file.write('\n')
    except Exception as e:
        _logger.exception('Reproduction failed.\n{}'.format(e))
        sys.exit(1)
    else:
        sys.exit(0 if all(r.passed for r in results) else 1)


def _suite_text(report):
    rows = []
    for name, result in report['properties'].items():
        rows.append((name, 'PASS' if result['passed'] else 'FAIL',
                     result['checked'], result['failures']))
    lines = [
        header_line('Property suite'),
        'seed: {}  cases: {}  mutation: {}'.format(
            report['seed'], report['cases'], report['mutation']),
        format_table(rows, ('property', 'result', 'checked', 'failures'))
    ]
    for name, result in report['properties'].items():
        if result['counterexample'] is not None:
            lines.append('counterexample for {}:'.format(name))
            lines.append(json.dumps(result['counterexample'], sort_keys=True))
    lines.append('PASS' if report['passed'] else 'FAIL')
    return '\n'.join(lines)


@click.command('suite')
@click.option(
    '--seed', '-sd', 'suite_seed', help='Integer seed for drawing the random '
    'shifts.', default=1, show_default=True, type=click.IntRange(min=0))
@click.option(
    '--cases', '-c', help='Number of random shifts to check.', default=100,
    show_default=True, type=click.IntRange(min=1))
@click.option(
    '--property', '-p', 'properties', help='Name of a property to run. This option '
    'can be used several times. By default all properties run.', multiple=True,
    type=click.Choice(PROPERTIES))
@click.option(
    '--mutation', '-mu', help='Optional name of a wrong criterion variant to '
    'put in place of the real one. The suite should then fail.', default=None,
    type=click.Choice(sorted(MUTATIONS)))
@click.option(
    '--restarts', '-r', help='Number of random restarts of the certifier.',
    default=CERTIFY_RESTARTS, show_default=True, type=click.IntRange(min=1))
@click.option(
    '--workers', '-w', help='Number of threads running certifier restarts.',
    default=CERTIFY_WORKERS, show_default=True, type=click.IntRange(min=1))
@format_option
def suite(suite_seed, cases, properties, mutation, restarts, workers, output_format,
          output_file):
    """Run the randomized property suite over seeded random weighted shifts.

    The command exits with code 1 when any property fails.
    """
    try:
        par = CertifyPar(restarts=restarts, workers=workers)
        report = run_suite(suite_seed, cases, par, mutation, properties or None)
        if output_format == 'report':
            output_file.write(json.dumps(report, sort_keys=True, indent=2))
        else:
            output_file.write(_suite_text(report))
        output_file.write('\n')
    except Exception as e:
        _logger.exception('Property suite failed.\n{}'.format(e))
        sys.exit(1)
    else:
        sys.exit(0 if report['passed'] else 1)
