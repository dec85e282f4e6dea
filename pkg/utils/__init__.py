from .helpers import (
    FractionEncoder,
    format_matrix,
    matrix_from_csv,
    matrix_from_json,
    save_report,
    setup_logging,
)

__all__ = ['FractionEncoder', 'format_matrix', 'matrix_from_csv', 'matrix_from_json',
           'save_report', 'setup_logging']
