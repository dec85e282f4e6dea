from flask import Flask, jsonify
import logging

from config import config
from routes.api_routes import api_bp, init_api_routes
from utils.helpers import setup_logging

logger = logging.getLogger(__name__)


def create_app(config_name='default'):
    """Application factory pattern"""
    app = Flask(__name__)
    app_config = config[config_name]()
    app_config.init_app(app)
    app.config.from_object(app_config)

    init_api_routes(app_config)
    app.register_blueprint(api_bp)

    @app.route('/')
    def index():
        return jsonify({
            'service': 'Wheel Distance Pseudoinverse Service',
            'endpoints': [
                '/api/health',
                '/api/distance/<n>',
                '/api/pinv/<n>?method=closed|oracle',
                '/api/laplacian/<n>',
                '/api/alphas/<n>',
                '/api/verify?n_max=<n>'
            ]
        })

    # Error handlers
    @app.errorhandler(404)
    def not_found(error):
        return jsonify({'success': False, 'error': 'Not found'}), 404

    @app.errorhandler(500)
    def internal_error(error):
        logger.error(f"Internal server error: {error}", exc_info=True)
        return jsonify({'success': False, 'error': 'Internal server error'}), 500

    logger.info(f"Wheel pseudoinverse service initialized ({config_name})")
    return app


def run_server(config_name='default', host='0.0.0.0', port=8001):
    app = create_app(config_name)

    print("\n" + "=" * 50, flush=True)
    print("WHEEL DISTANCE PSEUDOINVERSE SERVICE")
    print("=" * 50)
    print(f"Access the API at: http://localhost:{port}/api")
    print("Available endpoints:")
    print("  - Health: /api/health")
    print("  - Distance matrix: /api/distance/<n>")
    print("  - Pseudoinverse: /api/pinv/<n>")
    print("  - Verification: /api/verify?n_max=<n>")
    print("=" * 50 + "\n")

    app.run(
        host=host,
        port=port,
        debug=app.config.get('DEBUG', False),
        threaded=True
    )


if __name__ == '__main__':
    app_config = config['default']
    setup_logging(app_config.LOG_LEVEL, app_config.LOG_FILE)
    run_server()
