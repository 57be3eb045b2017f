# coding=utf-8
"""Various utilities used throughout the package."""
from __future__ import division

import re

import numpy as np

from .config import SIG_DIGITS

_IMAG_UNIT = re.compile(r'^([+-]?)i$')


def parse_complex_token(token):
    """Parse a single weight token such as '2', '-0.5', '1+2i', '3i' or '-i'.

    Args:
        token: Text for a real number or a complex number written as re+imi.

    Returns:
        A Python complex number.
    """
    text = token.strip().replace(' ', '').lower()
    if not text:
        raise ValueError('Received an empty weight token.')
    unit = _IMAG_UNIT.match(text)
    if unit:  # a bare imaginary unit like 'i' or '-i'
        text = '{}1i'.format(unit.group(1))
    text = re.sub(r'([+-])i$', r'\g<1>1i', text)  # '1+i' means '1+1i'
    if text.endswith('i'):
        text = text[:-1] + 'j'
    if 'i' in text or 'n' in text:  # rejects inf, nan and stray letters
        raise ValueError('Weight token "{}" is not a number.'.format(token))
    try:
        value = complex(text)
    except ValueError:
        raise ValueError('Weight token "{}" is not a number.'.format(token))
    if not (np.isfinite(value.real) and np.isfinite(value.imag)):
        raise ValueError('Weight token "{}" is not finite.'.format(token))
    return value


def parse_weights(text):
    """Parse comma separated weight tokens into a tuple of complex numbers."""
    tokens = [tok for tok in text.split(',') if tok.strip()]
    if not tokens:
        raise ValueError('Expected at least one comma separated weight. '
                         'Got "{}".'.format(text))
    return tuple(parse_complex_token(tok) for tok in tokens)


def format_number(value, digits=SIG_DIGITS):
    """Format a real or complex number with a given number of significant digits.

    Numerically zero parts are dropped and negative zeros are avoided.
    """
    value = complex(value)
    real = 0.0 if value.real == 0 else value.real
    imag = 0.0 if value.imag == 0 else value.imag
    if imag == 0:
        return '{:.{}g}'.format(real, digits)
    if real == 0:
        return '{:.{}g}i'.format(imag, digits)
    sign = '+' if imag > 0 else '-'
    return '{:.{}g}{}{:.{}g}i'.format(real, digits, sign, abs(imag), digits)


def clean_matrix(matrix, tol=1e-12):
    """Round entries whose real or imaginary part is below tol (absolute) to zero."""
    matrix = np.array(matrix, dtype=np.complex128)
    real, imag = matrix.real.copy(), matrix.imag.copy()
    real[np.abs(real) < tol] = 0.0
    imag[np.abs(imag) < tol] = 0.0
    return real + 1j * imag


def format_matrix(matrix, digits=SIG_DIGITS, indent=4):
    """Get a right-aligned text table of a matrix with significant digit rounding.

    Args:
        matrix: A two-dimensional array-like of numbers or nested lists of
            already formatted text (like the output of matrix_to_rows).
        digits: Number of significant digits for each entry.
        indent: Number of spaces before each row.
    """
    if isinstance(matrix, list) and all(
            isinstance(c, str) for row in matrix for c in row):
        cells = matrix
    else:
        cells = matrix_to_rows(matrix, digits)
    if not cells or not cells[0]:
        return ' ' * indent + '[]'
    width = max(len(c) for row in cells for c in row)
    return '\n'.join(
        ' ' * indent + '  '.join(c.rjust(width) for c in row) for row in cells)


def header_line(header_text):
    """Create a header that helps organize the contents of a text report."""
    return \
        '# ---------------------------------------------------------\n' \
        '#              {}\n' \
        '# ---------------------------------------------------------'.format(
            header_text)


def format_table(rows, headers):
    """Format a list of row tuples as a left-aligned text table.

    Args:
        rows: A list of tuples (or lists) of values that can be turned into text.
        headers: A tuple of text for the column headers.
    """
    text_rows = [tuple(str(v) for v in row) for row in rows]
    widths = [len(h) for h in headers]
    for row in text_rows:
        widths = [max(w, len(v)) for w, v in zip(widths, row)]
    lines = ['  '.join(h.ljust(w) for h, w in zip(headers, widths)),
             '  '.join('-' * w for w in widths)]
    for row in text_rows:
        lines.append('  '.join(v.ljust(w) for v, w in zip(row, widths)))
    return '\n'.join(lines)


def matrix_to_rows(matrix, digits=SIG_DIGITS):
    """Convert a matrix to nested lists of formatted strings for JSON reports."""
    matrix = clean_matrix(matrix)
    return [[format_number(v, digits) for v in row] for row in matrix]
