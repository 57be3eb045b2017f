"""aluthge-lab commands that analyze a single operator."""
import click
import sys
import json
import logging

from aluthge_lab.analysis import TRANSFORMS, analyze as analyze_operator, \
    report_to_text, transform as transform_operator, safe_certify
from aluthge_lab.certify import CertifyPar, METHODS
from aluthge_lab.config import CERTIFY_SEED, CERTIFY_RESTARTS, CERTIFY_MAX_ITERS, \
    CERTIFY_METHOD, CERTIFY_WORKERS
from aluthge_lab.matrix import ComplexMatrix
from aluthge_lab.shift import WeightedShift
from aluthge_lab.util import format_matrix, format_number, format_table

_logger = logging.getLogger(__name__)


def load_operator(shift, shift_file, matrix):
    """Get a (matrix, shift) tuple from the mutually exclusive input options.

    The shift is None when the input is a matrix file. Problems with the input
    raise click.UsageError so that the command exits with code 2.
    """
    given = [v for v in (shift, shift_file, matrix) if v is not None]
    if len(given) != 1:
        raise click.UsageError(
            'Exactly one of --shift, --shift-file or --matrix must be given.')
    try:
        if shift is not None:
            weighted = WeightedShift.from_string(shift)
        elif shift_file is not None:
            weighted = WeightedShift.from_file(shift_file)
        else:
            operator = ComplexMatrix.from_file(matrix)
            if not operator.is_square:
                raise ValueError('The matrix file must hold a square matrix. '
                                 'Got {}x{}.'.format(operator.rows, operator.cols))
            return operator.values, None
    except (ValueError, KeyError, AssertionError) as e:
        raise click.UsageError('Invalid operator input: {}'.format(e))
    return weighted.to_matrix(), weighted


def input_options(func):
    """Add the --shift, --shift-file and --matrix options to a command."""
    func = click.option(
        '--matrix', '-m', help='Full path to a ComplexMatrix JSON file with the '
        'square matrix to use.', default=None, show_default=True,
        type=click.Path(exists=True, file_okay=True, dir_okay=False,
                        resolve_path=True))(func)
    func = click.option(
        '--shift-file', '-sf', help='Full path to a WeightedShift JSON file with '
        'the weighted shift to use.', default=None, show_default=True,
        type=click.Path(exists=True, file_okay=True, dir_okay=False,
                        resolve_path=True))(func)
    func = click.option(
        '--shift', '-s', help='Comma separated weights of a weighted shift. Each '
        'weight is a real number or a complex number written like 1+2i.',
        default=None, show_default=True, type=str)(func)
    return func


def certify_options(func):
    """Add the options that set up the certifier to a command."""
    func = click.option(
        '--workers', '-w', help='Number of threads running certifier restarts. '
        'The results do not depend on it.', default=CERTIFY_WORKERS,
        show_default=True, type=click.IntRange(min=1))(func)
    func = click.option(
        '--restarts', '-r', help='Number of random restarts of the certifier.',
        default=CERTIFY_RESTARTS, show_default=True, type=click.IntRange(min=1))(func)
    func = click.option(
        '--seed', '-sd', help='Integer seed of the certifier restarts.',
        default=CERTIFY_SEED, show_default=True, type=click.IntRange(min=0))(func)
    return func


def format_option(func):
    """Add the --format and --output-file options to a command."""
    func = click.option(
        '--output-file', '-o', help='Optional file to output the result. By '
        'default this will be printed out to stdout.',
        type=click.File('w'), default='-', show_default=True)(func)
    func = click.option(
        '--format', '-f', 'output_format', help='Text for the output format. '
        'Choose from: text, report. The report is a JSON document.',
        type=click.Choice(['text', 'report']), default='text',
        show_default=True)(func)
    return func


def write_report(report, output_format, output_file, to_text):
    """Write a report dictionary as sorted JSON or as text."""
    if output_format == 'report':
        output_file.write(json.dumps(report, sort_keys=True, indent=2))
    else:
        output_file.write(to_text(report))
    output_file.write('\n')


@click.command('analyze')
@input_options
@click.option(
    '--t', '-t', 't_values', help='A parameter between 0 and 1 for the generalized '
    'Aluthge transform. The generalized mean transform uses min(t, 1 - t). This '
    'option can be used several times.', multiple=True, type=click.FloatRange(0, 1),
    default=(0.5,), show_default=True)
@certify_options
@format_option
def analyze(shift, shift_file, matrix, t_values, seed, restarts, workers,
            output_format, output_file):
    """Analyze an operator with its polar decomposition, transforms and structure.

    The report holds the matrix, its polar factors, the Duggal, Aluthge and mean
    transforms with certifier verdicts, the structural predicates and, for weighted
    shifts, all the closed-form criteria.
    """
    operator, weighted = load_operator(shift, shift_file, matrix)
    try:
        par = CertifyPar(seed=seed, restarts=restarts, workers=workers)
        report = analyze_operator(operator, weighted, t_values, par)
        write_report(report, output_format, output_file, report_to_text)
    except Exception as e:
        _logger.exception('Operator analysis failed.\n{}'.format(e))
        sys.exit(1)
    else:
        sys.exit(0)


@click.command('transform')
@click.argument('name', type=click.Choice(TRANSFORMS))
@input_options
@click.option(
    '--t', '-t', 't_value', help='The parameter of the generalized Aluthge '
    'transform (between 0 and 1) or of the generalized mean transform (between 0 '
    'and 1/2).', default=0.5, show_default=True, type=float)
@format_option
def transform(name, shift, shift_file, matrix, t_value, output_format, output_file):
    """Get one matrix derived from the polar decomposition of an operator.

    \b
    Args:
        name: The matrix to get. One of polar-u, modulus, duggal, aluthge, mean.
    """
    operator, _ = load_operator(shift, shift_file, matrix)
    try:
        result = transform_operator(operator, name, t_value)
        if output_format == 'report':
            output_file.write(json.dumps(ComplexMatrix(result).to_dict(),
                                         sort_keys=True))
            output_file.write('\n')
        else:
            output_file.write(format_matrix(result, indent=0) + '\n')
    except Exception as e:
        _logger.exception('Transform failed.\n{}'.format(e))
        sys.exit(1)
    else:
        sys.exit(0)


def _verdict_text(verdict):
    rows = [('status', verdict.status),
            ('residual', format_number(verdict.residual, 3)),
            ('restarts used', verdict.restarts_used),
            ('seed', verdict.seed)]
    text = format_table(rows, ('field', 'value'))
    if verdict.certificate is not None:
        text += '\ncertificate\n' + format_matrix(verdict.certificate)
    return text


@click.command('certify')
@input_options
@certify_options
@click.option(
    '--max-iters', '-i', help='Maximum number of descent iterations per restart.',
    default=CERTIFY_MAX_ITERS, show_default=True, type=click.IntRange(min=1))
@click.option(
    '--method', '-md', help='Text for the descent direction of the certifier.',
    type=click.Choice(METHODS), default=CERTIFY_METHOD, show_default=True)
@format_option
def certify(shift, shift_file, matrix, seed, restarts, workers, max_iters, method,
            output_format, output_file):
    """Numerically decide whether an operator is complex symmetric.

    A CS verdict comes with a unitary symmetric certificate J satisfying
    T·J = J·T^T.
    """
    operator, _ = load_operator(shift, shift_file, matrix)
    try:
        par = CertifyPar(seed=seed, restarts=restarts, max_iters=max_iters,
                         method=method, workers=workers)
        verdict = safe_certify(operator, par)
        if output_format == 'report':
            output_file.write(json.dumps(verdict.to_dict(), sort_keys=True, indent=2))
        else:
            output_file.write(_verdict_text(verdict))
        output_file.write('\n')
    except Exception as e:
        _logger.exception('Certification failed.\n{}'.format(e))
        sys.exit(1)
    else:
        sys.exit(0)
