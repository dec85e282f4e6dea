from flask import Blueprint, request, jsonify
import logging
from datetime import datetime

from models.bench import compute_pinv, METHODS
from models.exact_algebra import InvalidInputError, rat_str
from models.special_laplacian import alpha_table, special_laplacian
from models.verification import run_verification
from models.wheel import check_odd_order, distance_matrix_closed
from utils.helpers import matrix_payload

logger = logging.getLogger(__name__)

api_bp = Blueprint('api', __name__, url_prefix='/api')

config = None


def init_api_routes(app_config):
    """Hand the routes the application config; called from `create_app`."""
    global config
    config = app_config


def _checked_order(n):
    check_odd_order(n)
    if n > config.API_MAX_N:
        raise InvalidInputError(f"n = {n} exceeds the API limit of {config.API_MAX_N}")
    return n


@api_bp.errorhandler(InvalidInputError)
def invalid_input(error):
    logger.warning(f"Rejected request {request.path}: {error}")
    return jsonify({'success': False, 'error': str(error)}), 400


@api_bp.route('/health')
def health_check():
    """Health check endpoint"""
    return jsonify({
        'status': 'healthy',
        'timestamp': datetime.now().isoformat(),
        'service': 'Wheel Distance Pseudoinverse Service'
    })


@api_bp.route('/distance/<int(signed=True):n>')
def get_distance(n):
    return jsonify(matrix_payload(distance_matrix_closed(_checked_order(n)).mat))


@api_bp.route('/pinv/<int(signed=True):n>')
def get_pinv(n):
    method = request.args.get('method', 'closed')
    if method not in METHODS:
        raise InvalidInputError(f"Unknown method {method!r}; expected one of {', '.join(METHODS)}")
    return jsonify(matrix_payload(compute_pinv(_checked_order(n), method), method=method))


@api_bp.route('/laplacian/<int(signed=True):n>')
def get_laplacian(n):
    return jsonify(matrix_payload(special_laplacian(_checked_order(n)).mat))


@api_bp.route('/alphas/<int(signed=True):n>')
def get_alphas(n):
    table = alpha_table(_checked_order(n))
    return jsonify({
        'n': table.n,
        'alphas': [rat_str(a) for a in table.alphas],
        'g': list(table.g_values)
    })


@api_bp.route('/verify')
def verify():
    """Run the verification suite for odd n up to ``n_max``"""
    raw = request.args.get('n_max', str(min(config.VERIFY_N_MAX, config.API_VERIFY_MAX_N)))
    try:
        n_max = int(raw)
    except ValueError:
        raise InvalidInputError(f"n_max must be an integer, got {raw!r}")
    check_odd_order(n_max)
    if n_max > config.API_VERIFY_MAX_N:
        raise InvalidInputError(f"n_max = {n_max} exceeds the API verification limit of {config.API_VERIFY_MAX_N}")
    report = run_verification(n_max, workers=config.VERIFY_WORKERS)
    logger.info(f"API verification up to n = {n_max}: overall {report.overall}")
    return jsonify(report.to_dict())
