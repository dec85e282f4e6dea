import csv
import io
import json
import logging
import os
import sys
from datetime import datetime
from fractions import Fraction

from models.exact_algebra import InvalidInputError, RatMatrix, parse_rat, rat_str

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
FORMATS = ('csv', 'json', 'latex')


class FractionEncoder(json.JSONEncoder):
    """JSON encoder that writes rationals as "p/q" strings"""
    def default(self, obj):
        if isinstance(obj, Fraction):
            return rat_str(obj)
        if isinstance(obj, RatMatrix):
            return [[rat_str(x) for x in row] for row in obj.to_rows()]
        return super().default(obj)


def setup_logging(level='INFO', log_file=None):
    """Configure the root logger; stdout is left alone for data output"""
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.INFO),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True
    )


# serialization -----------------------------------------------------------

def matrix_to_csv(m):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    for row in m.to_rows():
        writer.writerow([rat_str(x) for x in row])
    return buffer.getvalue()


def matrix_from_csv(text):
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    try:
        return RatMatrix([[parse_rat(cell.strip()) for cell in r] for r in rows])
    except ValueError as e:
        raise InvalidInputError(f"Malformed CSV matrix: {e}") from e


def vector_to_csv(values):
    return ','.join(rat_str(x) for x in values) + '\n'


def matrix_to_json(m):
    payload = {'n': m.rows, 'rows': m}
    return json.dumps(payload, cls=FractionEncoder) + '\n'


def matrix_from_json(text):
    try:
        payload = json.loads(text)
        return RatMatrix([[parse_rat(cell) for cell in r] for r in payload['rows']])
    except (KeyError, TypeError, json.JSONDecodeError) as e:
        raise InvalidInputError(f"Malformed JSON matrix: {e}") from e


def matrix_to_latex(m):
    """Array environment with the common denominator pulled out as \\frac{1}{s}"""
    s = m.denominator_lcm()
    scaled = m.scale(s)
    body = ' \\\\\n'.join(' & '.join(str(x.numerator) for x in row) for row in scaled.to_rows())
    prefix = f'\\frac{{1}}{{{s}}}' if s != 1 else ''
    return f"{prefix}\\left[\\begin{{array}}{{{'c' * m.cols}}}\n{body}\n\\end{{array}}\\right]\n"


def format_matrix(m, fmt):
    if fmt == 'csv':
        return matrix_to_csv(m)
    if fmt == 'json':
        return matrix_to_json(m)
    if fmt == 'latex':
        return matrix_to_latex(m)
    raise InvalidInputError(f"Unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def matrix_payload(m, **extra):
    """Dict form used by the HTTP API"""
    payload = {'n': m.rows, 'rows': [[rat_str(x) for x in row] for row in m.to_rows()]}
    payload.update(extra)
    return payload


# reports ------------------------------------------------------------------

def save_report(report, report_file):
    """Write a verification report as JSON; returns the path or None on failure"""
    try:
        folder = os.path.dirname(report_file)
        if folder:
            os.makedirs(folder, exist_ok=True)
        data = report.to_dict()
        data['generated_at'] = datetime.now().isoformat()
        with open(report_file, 'w') as f:
            json.dump(data, f, indent=2, cls=FractionEncoder)
        logger.info(f"Saved verification report to {report_file}")
        return report_file
    except OSError as e:
        logger.error(f"Error saving report to {report_file}: {e}")
        return None
