"""Command-line front end: export matrices, run the verification sweep and benchmarks.

Matrices go to stdout; logs go to stderr. Exit codes: 0 success, 1 verification
failure, 2 usage or input error.
"""
import json
import logging
import os
import sys

import click

from config import get_config
from models.bench import METHODS, compute_pinv, records_to_csv, run_bench
from models.exact_algebra import InvalidInputError, RatMatrix, rat_str
from models.special_laplacian import alpha_table, special_laplacian
from models.verification import run_verification
from models.wheel import check_odd_order, distance_matrix_closed
from utils.helpers import FORMATS, format_matrix, save_report, setup_logging, vector_to_csv

logger = logging.getLogger(__name__)


def _odd_order(ctx, param, value):
    if value is None:
        return value
    try:
        return check_odd_order(value)
    except InvalidInputError as e:
        raise click.BadParameter(str(e), ctx=ctx, param=param)


def _int_list(ctx, param, value):
    if value is None:
        return None
    try:
        return [check_odd_order(int(x)) for x in value.split(',') if x.strip()]
    except (ValueError, InvalidInputError) as e:
        raise click.BadParameter(str(e), ctx=ctx, param=param)


def _methods(ctx, param, value):
    methods = [m.strip() for m in value.split(',') if m.strip()]
    unknown = [m for m in methods if m not in METHODS]
    if unknown or not methods:
        raise click.BadParameter(f"expected a comma list of {', '.join(METHODS)}", ctx=ctx, param=param)
    return methods


order_option = click.option('--n', 'n', type=int, required=True, callback=_odd_order, help='Odd order n >= 5.')
format_option = click.option('--format', 'fmt', type=click.Choice(FORMATS), default='csv', show_default=True)


class WheelGroup(click.Group):
    """Turns domain input errors raised inside commands into usage errors (exit 2)."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except InvalidInputError as e:
            raise click.UsageError(str(e), ctx=ctx)


@click.group(cls=WheelGroup)
@click.option('--env', default=None, help='Config name (development, production, testing); defaults to WHEEL_ENV.')
@click.pass_context
def cli(ctx, env):
    """Exact Moore-Penrose inverse of odd wheel distance matrices."""
    try:
        app_config = get_config(env)
    except KeyError:
        raise click.BadParameter(f"unknown config {env!r}", param_hint='--env')
    setup_logging(app_config.LOG_LEVEL, app_config.LOG_FILE)
    ctx.obj = app_config
    ctx.meta["config_name"] = env or os.getenv("WHEEL_ENV", "default")


def _emit(text):
    click.echo(text, nl=False)


@cli.command()
@order_option
@format_option
def dist(n, fmt):
    """Distance matrix D of W_n."""
    _emit(format_matrix(distance_matrix_closed(n).mat, fmt))


@cli.command()
@order_option
@click.option('--method', type=click.Choice(METHODS), default='closed', show_default=True)
@format_option
def pinv(n, method, fmt):
    """Moore-Penrose inverse of D, by the closed form or the oracle."""
    _emit(format_matrix(compute_pinv(n, method), fmt))


@cli.command()
@order_option
@format_option
def slap(n, fmt):
    """Special Laplacian of W_n."""
    _emit(format_matrix(special_laplacian(n).mat, fmt))


@cli.command()
@order_option
@format_option
def alphas(n, fmt):
    """The coefficients alpha_1..alpha_m."""
    table = alpha_table(n)
    if fmt == 'csv':
        _emit(vector_to_csv(table.alphas))
    elif fmt == 'json':
        _emit(json.dumps({'n': n, 'alphas': [rat_str(a) for a in table.alphas]}) + '\n')
    else:
        _emit(format_matrix(RatMatrix.row_vector(table.alphas), fmt))


@cli.command()
@click.option('--n-max', 'n_max', type=int, default=None, callback=_odd_order,
              help='Largest odd n to verify; defaults to VERIFY_N_MAX.')
@click.option('--report', 'report_path', type=click.Path(dir_okay=False), default=None,
              help='Where to write the JSON report; defaults to DEFAULT_REPORT_FILE.')
@click.option('--workers', type=click.IntRange(min=1), default=None)
@click.option('--with-identities', is_flag=True, help='Extend the alpha identities to IDENTITY_N_MAX.')
@click.option('--perturb', is_flag=True, hidden=True, help='Tamper with the special Laplacian (negative-path test).')
@click.pass_obj
def verify(app_config, n_max, report_path, workers, with_identities, perturb):
    """Run every check for odd n in [5, n_max] and write a report."""
    n_max = n_max or app_config.VERIFY_N_MAX
    report = run_verification(
        n_max,
        perturb=perturb,
        workers=workers or app_config.VERIFY_WORKERS,
        progress=sys.stderr.isatty(),
        identity_n_max=app_config.IDENTITY_N_MAX if with_identities else None,
    )
    path = report_path or app_config.DEFAULT_REPORT_FILE
    if save_report(report, path) is None:
        click.echo(f"error: could not write report to {path}", err=True)
        sys.exit(2)

    failures = report.failures
    click.echo(f"{len(report.checks) - len(failures)}/{len(report.checks)} checks passed, report at {path}", err=True)
    if failures:
        for record in failures:
            click.echo(f"FAILED n={record.n} {record.check_id}: {record.detail}", err=True)
        sys.exit(1)


@cli.command()
@click.option('--n-list', 'n_list', default=None, callback=_int_list, help='Comma list of odd n.')
@click.option('--methods', default=','.join(METHODS), callback=_methods, show_default=True)
@click.option('--repeats', type=click.IntRange(min=1), default=None)
@click.option('--oracle-cutoff', type=int, default=None)
@click.pass_obj
def bench(app_config, n_list, methods, repeats, oracle_cutoff):
    """Time closed-form assembly against the oracle; CSV to stdout."""
    if n_list is None:
        n_list = _int_list(None, None, app_config.BENCH_N_LIST)
    records = run_bench(
        n_list,
        methods=methods,
        repeats=repeats or app_config.BENCH_REPEATS,
        oracle_cutoff=app_config.ORACLE_CUTOFF if oracle_cutoff is None else oracle_cutoff,
    )
    _emit(records_to_csv(records))


@cli.command()
@click.option('--host', default='0.0.0.0', show_default=True)
@click.option('--port', default=8001, type=int, show_default=True)
@click.pass_context
def serve(ctx, host, port):
    """Serve the read-only JSON API."""
    from app import run_server

    run_server(ctx.meta["config_name"], host=host, port=port)


if __name__ == "__main__":
    cli()
