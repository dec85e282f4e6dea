from .exact_algebra import IdentityViolation, InvalidInputError, RatMatrix, Circulant
from .wheel import build_wheel, distance_matrix_closed
from .special_laplacian import alpha_table, special_laplacian
from .closed_form import closed_form_pinv
from .rank_certificate import build_rank_witness, verify_rank_certificate
from .verification import VerificationReport, run_verification
from .bench import run_bench

__all__ = [
    'IdentityViolation', 'InvalidInputError', 'RatMatrix', 'Circulant',
    'build_wheel', 'distance_matrix_closed',
    'alpha_table', 'special_laplacian',
    'closed_form_pinv',
    'build_rank_witness', 'verify_rank_certificate',
    'VerificationReport', 'run_verification',
    'run_bench',
]
