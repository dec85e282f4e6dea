"""Per-n check suite behind ``verify``: every exact identity of the construction, recorded."""
import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import partial

from tqdm import tqdm

from .closed_form import (
    closed_form_pinv,
    edm_pinv_identity,
    f_vector,
    kd_product,
    ld_plus_2i,
    ld_product,
    m_matrix,
    row_product_ck_dtilde,
    theta_identity,
    vl_product,
    w_vector,
)
from .exact_algebra import InvalidInputError, RatMatrix, is_psd_symmetric, mp_pinv_oracle, penrose_check, rank
from .rank_certificate import colsum_X, rank_of_special_laplacian, verify_rank_certificate
from .special_laplacian import (
    alpha_closed,
    alpha_table,
    half_order,
    identity_check,
    identity_indices,
    laplacian_row_sum_block,
    special_laplacian,
    special_matrix,
    special_matrix_row_sums,
    special_vector,
    v_ck_product,
)
from .wheel import (
    build_wheel,
    check_odd_order,
    distance_matrix_bfs,
    distance_matrix_block,
    distance_matrix_closed,
    is_edm_via_gram,
    null_vector_d,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckRecord:
    check_id: str
    n: int
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    n_range: list[int]
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def overall(self):
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_dict(self):
        return {
            "n_range": list(self.n_range),
            "overall": self.overall,
            "checks": [asdict(c) for c in self.checks],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            n_range=list(data["n_range"]),
            checks=[CheckRecord(**c) for c in data["checks"]],
        )


def perturbed_laplacian(n):
    """L̃ with 1 added to the first rim diagonal entry."""
    lap = special_laplacian(n).mat
    return lap.with_entry(1, 1, lap[1, 1] + 1)


def _completes(fn, *args):
    """Wrap an operation that raises on failure."""

    def run():
        fn(*args)
        return True

    return run


def _all_equal(values, expected):
    return all(v == expected for v in values)


def _identity_holds(which, n, j):
    lhs, rhs = identity_check(which, n, j)
    return lhs == rhs


def identity_checks(n):
    checks = {}
    for which, j in identity_indices(n):
        check_id = f"identity.{which.value}" if j is None else f"identity.{which.value}[j={j}]"
        checks[check_id] = partial(_identity_holds, which, n, j)
    return checks


def suite_for(n, laplacian=None):
    """All checks for one order n; ``laplacian`` replaces L̃ wherever L̃ is an input."""
    check_odd_order(n)
    lap = special_laplacian(n).mat if laplacian is None else laplacian
    d = distance_matrix_closed(n).mat
    ones = [1] * n
    m = half_order(n)
    ks = range(1, m + 1)

    def pinv():
        return closed_form_pinv(n, laplacian).K

    def partition():
        total = [sum(col) for col in zip(*(special_vector(n, k) for k in ks))]
        return total == [0] + [1] * (n - 2)

    def alphas_closed():
        table = alpha_table(n)
        return all(table.alpha(k) == a for k, a in alpha_closed(n).items())

    checks = {
        "distance.bfs": lambda: distance_matrix_bfs(build_wheel(n)).mat == d,
        "distance.block": lambda: distance_matrix_block(n).mat == d,
        "distance.null_vector": lambda: _all_equal(d.apply(null_vector_d(n)), 0),
        "distance.rim_row_sums": lambda: _all_equal(
            distance_matrix_closed(n).rim_block.apply([1] * (n - 1)), 2 * (n - 3)
        ),
        "distance.edm": lambda: is_edm_via_gram(d),
        "distance.rank": lambda: rank(d) == n - 1,
        "laplacian.symmetric": lap.is_symmetric,
        "laplacian.row_sums": lambda: _all_equal(lap.apply(ones), 0),
        "laplacian.row_sum_block": _completes(laplacian_row_sum_block, n),
        "laplacian.rank": _completes(rank_of_special_laplacian, n, laplacian),
        "laplacian.psd": lambda: is_psd_symmetric(lap),
        "laplacian.partition": partition,
        "laplacian.ck_symmetric": lambda: all(special_matrix(n, k).dense().is_symmetric() for k in ks),
        "laplacian.ck_row_sums": lambda: all(_completes(special_matrix_row_sums, n, k)() for k in ks),
        "laplacian.v_ck": lambda: all(_completes(v_ck_product, n, k)() for k in ks),
        "laplacian.alpha_closed": alphas_closed,
    }
    checks.update(identity_checks(n))
    checks.update(
        {
            "pinv.oracle": lambda: pinv() == mp_pinv_oracle(d),
            "pinv.penrose": lambda: penrose_check(d, pinv()).ok,
            "pinv.dw": lambda: _all_equal(d.apply(w_vector(n)), Fraction(n - 1, 4)),
            "pinv.ones": lambda: pinv().apply(ones) == tuple(Fraction(4, n - 1) * x for x in w_vector(n)),
            "pinv.total": lambda: sum(pinv().apply(ones)) == Fraction(4, n - 1),
            "lemma.rows": lambda: all(
                _completes(row_product_ck_dtilde, n, k)() for k in range(1, m + 1)
            ),
            "lemma.f_vector": _completes(f_vector, n),
            "lemma.m_matrix": _completes(m_matrix, n),
            "lemma.ld_product": _completes(ld_product, n, laplacian),
            "lemma.ld_plus_2i": _completes(ld_plus_2i, n, laplacian),
            "lemma.kd_product": _completes(kd_product, n, laplacian),
            "lemma.vl_product": _completes(vl_product, n, laplacian),
            "theta": lambda: theta_identity(n, laplacian)[1],
            "edm.pinv_identity": lambda: edm_pinv_identity(n, laplacian),
        }
    )
    if n >= 9:
        checks["rank.certificate"] = lambda: verify_rank_certificate(n, laplacian)
        checks["rank.colsum_X"] = _completes(colsum_X, n)
    return checks


def _run_checks(n, checks):
    records = []
    for check_id, check in checks.items():
        try:
            passed = bool(check())
            detail = "" if passed else "returned false"
        except Exception as e:
            passed, detail = False, f"{type(e).__name__}: {e}"
        if not passed:
            logger.warning(f"n = {n}: {check_id} failed ({detail})")
        else:
            logger.debug(f"n = {n}: {check_id} passed")
        records.append(CheckRecord(check_id=check_id, n=n, passed=passed, detail=detail))
    return records


def verify_order(n, perturb=False):
    laplacian = perturbed_laplacian(n) if perturb else None
    return _run_checks(n, suite_for(n, laplacian))


def odd_range(n_max, start=5):
    check_odd_order(n_max)
    return list(range(start, n_max + 1, 2))


def run_verification(
    n_max,
    perturb=False,
    workers=1,
    progress=False,
    identity_n_max=None,
):
    """Run the full suite for every odd n in [5, n_max].

    With ``identity_n_max`` the alpha identities alone are extended to every odd
    order up to that bound; those orders are listed in ``n_range`` too. Distinct n
    may run on a thread pool; records are sorted by (n, check_id) either way.
    """
    n_range = odd_range(n_max)
    if workers < 1:
        raise InvalidInputError(f"workers must be positive, got {workers}")
    logger.info(f"Verifying odd n in [5, {n_max}] with {workers} worker(s){' (perturbed L̃)' if perturb else ''}")

    jobs = {n: (lambda n=n: verify_order(n, perturb)) for n in n_range}
    if identity_n_max is not None and identity_n_max > n_max:
        for n in odd_range(identity_n_max, start=n_max + 2):
            jobs[n] = lambda n=n: _run_checks(n, identity_checks(n))

    records = []
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = {pool.submit(job): n for n, job in jobs.items()}
        for future in tqdm(as_completed(futures), total=len(futures), desc="verify", unit="n", disable=not progress):
            records.extend(future.result())

    records.sort(key=lambda r: (r.n, r.check_id))
    report = VerificationReport(n_range=sorted(jobs), checks=records)
    logger.info(f"{len(records)} checks, {len(report.failures)} failed")
    return report
