from .api_routes import api_bp, init_api_routes

__all__ = ['api_bp', 'init_api_routes']
