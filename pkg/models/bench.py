"""Timing harness: closed-form assembly of D† against the rank-factorization oracle.

Runs strictly sequentially on the calling thread so that timings stay comparable.
"""
import csv
import io
import logging
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .closed_form import closed_form_stages
from .exact_algebra import InvalidInputError, pinv_oracle_stages
from .wheel import check_odd_order, distance_matrix_closed

logger = logging.getLogger(__name__)

METHODS = ("closed", "oracle")
CSV_HEADER = ("n", "method", "seconds", "peak_bits", "verified")


@dataclass(frozen=True)
class BenchRecord:
    n: int
    method: str
    wall_time: Optional[float]
    peak_entry_bits: Optional[int]
    verified: bool
    skipped: bool = False


def peak_bits(*matrices):
    """Largest bit length of any numerator or denominator across the matrices."""
    return max(
        (max(x.numerator.bit_length(), x.denominator.bit_length()) for m in matrices for x in m.array.flat),
        default=0,
    )


def _check_method(method):
    if method not in METHODS:
        raise InvalidInputError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")


def compute_stages(n, method):
    """Every matrix the method builds on its way to D†; the result is under ``"pinv"``."""
    _check_method(method)
    if method == "closed":
        return closed_form_stages(n)
    return pinv_oracle_stages(distance_matrix_closed(n).mat)


def compute_pinv(n, method):
    return compute_stages(n, method)["pinv"]


def _time(n, method, repeats):
    times = []
    stages = None
    for _ in range(repeats):
        start = time.perf_counter()
        stages = compute_stages(n, method)
        times.append(time.perf_counter() - start)
    return float(np.median(times)), stages


def run_bench(n_list, methods=METHODS, repeats=3, oracle_cutoff=201):
    """Median-of-repeats wall time per (n, method).

    ``peak_entry_bits`` covers every intermediate matrix of the method, not just
    D†. Oracle runs above ``oracle_cutoff`` are skipped and reported with
    ``skipped=True``. ``verified`` is set when both methods ran for n and
    produced identical matrices.
    """
    n_list = [check_odd_order(n) for n in n_list]
    if repeats < 1:
        raise InvalidInputError(f"repeats must be at least 1, got {repeats}")
    for method in methods:
        _check_method(method)

    records = []
    for n in n_list:
        results = {}
        skipped = []
        for method in methods:
            if method == "oracle" and n > oracle_cutoff:
                logger.warning(f"Skipping oracle for n = {n} (cutoff {oracle_cutoff})")
                skipped.append(method)
                continue
            results[method] = _time(n, method, repeats)
            logger.info(f"n = {n}, {method}: {results[method][0]:.6f}s")

        verified = len(results) == len(METHODS) and results["closed"][1]["pinv"] == results["oracle"][1]["pinv"]
        if len(results) == len(METHODS) and not verified:
            logger.error(f"closed form and oracle disagree for n = {n}")
        for method in methods:
            if method in skipped:
                records.append(BenchRecord(n, method, None, None, False, skipped=True))
            else:
                seconds, stages = results[method]
                records.append(BenchRecord(n, method, seconds, peak_bits(*stages.values()), verified))
    return records


def records_to_csv(records):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        seconds = "skipped" if r.skipped else f"{r.wall_time:.6f}"
        bits = "" if r.peak_entry_bits is None else r.peak_entry_bits
        writer.writerow([r.n, r.method, seconds, bits, str(r.verified).lower()])
    return buffer.getvalue()
