import os
from dotenv import load_dotenv

load_dotenv()

BASE_DIR = os.path.dirname(os.path.abspath(__file__))


class Config:
    # Flask Config
    SECRET_KEY = os.getenv('SECRET_KEY', 'change-me')

    # Logging Config
    LOG_LEVEL = os.getenv('WHEEL_LOG_LEVEL', 'INFO')
    LOG_FILE = os.getenv('WHEEL_LOG_FILE')  # unset -> stderr only

    # Report Config
    REPORT_FOLDER = os.path.join(BASE_DIR, 'data', 'reports')
    DEFAULT_REPORT_FILE = os.path.join(REPORT_FOLDER, 'verification_report.json')

    # Verification Config
    VERIFY_N_MAX = int(os.getenv('WHEEL_VERIFY_N_MAX', 21))
    IDENTITY_N_MAX = 101
    VERIFY_WORKERS = int(os.getenv('WHEEL_VERIFY_WORKERS', 1))

    # Bench Config
    BENCH_REPEATS = 3
    ORACLE_CUTOFF = 201
    BENCH_N_LIST = '51,101,201'

    # API Config
    API_MAX_N = 101
    API_VERIFY_MAX_N = int(os.getenv('WHEEL_API_VERIFY_MAX_N', 21))

    @staticmethod
    def init_app(app=None):
        # Create necessary directories
        os.makedirs(Config.REPORT_FOLDER, exist_ok=True)


class DevelopmentConfig(Config):
    DEBUG = True


class ProductionConfig(Config):
    DEBUG = False


class TestingConfig(Config):
    TESTING = True
    DEBUG = False
    LOG_LEVEL = 'WARNING'
    VERIFY_N_MAX = 9
    API_MAX_N = 21
    API_VERIFY_MAX_N = 9


config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}


def get_config(name=None):
    """Config class named by ``name`` or the WHEEL_ENV variable"""
    return config[name or os.getenv('WHEEL_ENV', 'default')]
