"""
Command-line interface for MOPE cumulants and CLT certification.

Commands:
    variance     Laurent window of f o c and the limiting variance
    converge     Cumulants of X_n(f) over an n sweep against the Gaussian limit
    verify       Run a verification suite
    dump-matrix  Write a window of J, T_c, T_{f o c}, f(J) or the Toeplitz matrix
    oracle       Cross-check a tiny discrete ensemble by enumeration

Example:
    $ mopeclt variance --config hermite.json --out results/
    $ mopeclt converge --config hermite.json --out results/
    $ mopeclt verify all --out results/
"""

import logging
import sys
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple

import click
import numpy as np

from .. import __version__, constants
from ..core.banded import HessenbergMatrix
from ..core.cumulants import linear_statistic_cumulants, rows_for_statistic
from ..core.families import nevai_limits
from ..core.lattice_path import LatticePath, path_from_spec
from ..core.recurrence import (
    build_J,
    build_T_composed,
    build_Tc,
    polynomial_of_J,
    right_limit_sweep,
    toeplitz_matrix,
)
from ..core.symbol import (
    compose_laurent,
    compose_laurent_series,
    degree,
    finite_n_variance,
    limiting_variance,
)
from ..enums import MatrixKind, SuiteName
from ..exceptions import MopeError
from ..io.loaders import OutputSpec, RunConfig, Tolerances, family_spec_to_dict, load_run_config
from ..io.writers import dump_matrix_window, save_json_report, write_csv
from ..verification.results import Severity, finish
from ..verification.suites import laurent_agreement, oracle_checks, run_suite

logger = logging.getLogger(__name__)


def _configure_logging(verbose: bool, debug: bool) -> None:
    level = logging.DEBUG if debug else logging.INFO if verbose else logging.WARNING
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _run_guarded(ctx: click.Context, action: Callable[[], int]) -> None:
    """Run a command body, mapping library and config errors to exit code 2."""
    try:
        code = action()
    except (MopeError, FileNotFoundError) as e:
        logger.debug("command failed", exc_info=True)
        click.echo(f"Error: {e}", err=True)
        code = constants.EXIT_USAGE
    ctx.exit(code)


def _limit_direction(config: RunConfig, path: LatticePath) -> np.ndarray:
    return np.asarray(config.nu if config.nu is not None else path.nu, dtype=float)


config_option = click.option(
    "--config", "config_file", type=click.Path(dir_okay=False, path_type=Path), required=True,
    help="Run configuration (JSON)",
)
optional_config_option = click.option(
    "--config", "config_file", type=click.Path(dir_okay=False, path_type=Path), default=None,
    help="Run configuration (JSON); only its tolerances are read",
)
out_option = click.option(
    "--out", "out_dir", type=click.Path(file_okay=False, path_type=Path), default=Path("."),
    show_default=True, help="Output directory",
)


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Log progress at INFO level")
@click.option("--debug", is_flag=True, help="Log details at DEBUG level")
@click.version_option(__version__, prog_name="mopeclt")
def cli(verbose: bool, debug: bool) -> None:
    """Recurrence-matrix cumulants and CLT certification for MOP ensembles."""
    _configure_logging(verbose, debug)


# =============================================================================
# variance
# =============================================================================

@cli.command()
@config_option
@out_option
@click.pass_context
def variance(ctx: click.Context, config_file: Path, out_dir: Path) -> None:
    """Laurent coefficients of f o c and the limiting variance."""
    _run_guarded(ctx, lambda: _variance(config_file, out_dir))


def _variance(config_file: Path, out_dir: Path) -> int:
    config = load_run_config(config_file)
    tol = config.tolerances
    path = path_from_spec(config.path_spec(), max(config.n_values))
    nu = _limit_direction(config, path)
    symbol = nevai_limits(config.family, nu)

    window = compose_laurent(
        config.f, symbol, aliasing_rtol=tol.aliasing_rtol, tail_rtol=tol.tail_rtol)
    series = compose_laurent_series(
        config.f, symbol, L=window.lower, tail_rtol=tol.tail_rtol, certify_tail=False)
    agreement = laurent_agreement(window, series, tol, "quadrature vs series")
    sigma2 = limiting_variance(window)

    write_csv(
        out_dir / config.outputs.laurent_csv,
        ("ell", "f_ell", "error_bound"),
        [(ell, float(value), window.error_bound(ell)) for ell, value in window.items()],
    )
    save_json_report({
        "variance": sigma2,
        "variance_series": limiting_variance(series),
        "routes_agree": agreement.severity == Severity.INFO,
        "finite_n_variance": {n: finite_n_variance(window, n) for n in config.n_values},
        "family": family_spec_to_dict(config.family),
        "nu": nu.tolist(),
        "f": list(config.f),
        "window": window.to_dict(),
    }, out_dir / config.outputs.variance_json)

    click.echo(f"variance {sigma2:.15g}")
    if agreement.severity == Severity.ERROR:
        click.echo(f"Laurent routes disagree: {agreement.message}", err=True)
        return constants.EXIT_CHECK_FAILED
    return constants.EXIT_OK


# =============================================================================
# converge
# =============================================================================

@cli.command()
@config_option
@out_option
@click.pass_context
def converge(ctx: click.Context, config_file: Path, out_dir: Path) -> None:
    """Cumulants C_m(X_n(f)) over the n sweep against the Gaussian limit."""
    _run_guarded(ctx, lambda: _converge(config_file, out_dir))


def convergence_rows(config: RunConfig, path: LatticePath, sigma2: float
                     ) -> List[Tuple[int, int, float, Optional[float], Optional[float]]]:
    """
    Rows (n, m, C_m, reference, gap) of a convergence sweep.

    The reference is sigma^2 for m = 2, 0 for m >= 3 and blank for the mean.
    """
    rows = []
    for n in config.n_values:
        try:
            report = linear_statistic_cumulants(config.family, path, config.f, n, config.m_max)
        except MopeError as e:
            raise MopeError(f"n={n}: {e}") from e
        for m in range(1, config.m_max + 1):
            value = float(report.values[m])
            reference = None if m == 1 else sigma2 if m == 2 else 0.0
            gap = None if reference is None else abs(value - reference)
            rows.append((n, m, value, reference, gap))
        logger.info(f"n={n}: C_2 = {float(report.values.get(2, float('nan'))):.12g}")
    return rows


def _converge(config_file: Path, out_dir: Path) -> int:
    config = load_run_config(config_file)
    tol = config.tolerances
    n_max = max(config.n_values)
    w = constants.VERIFY_RIGHT_LIMIT_WINDOW
    length = max(rows_for_statistic(config.f, n_max, config.m_max), n_max + w + 1) + 1
    path = path_from_spec(config.path_spec(), length)
    nu = _limit_direction(config, path)
    symbol = nevai_limits(config.family, nu)
    sigma2 = limiting_variance(compose_laurent(
        config.f, symbol, aliasing_rtol=tol.aliasing_rtol, tail_rtol=tol.tail_rtol))

    write_csv(out_dir / config.outputs.converge_csv, ("n", "m", "C_m", "reference", "gap"),
              convergence_rows(config, path, sigma2))
    sweep = right_limit_sweep(config.family, path, nu, config.n_values, w)
    write_csv(out_dir / config.outputs.right_limit_csv, ("n", "gap"),
              [(n, gap) for n, gap, _ in sweep])
    click.echo(f"limiting variance {sigma2:.15g}")
    return constants.EXIT_OK


# =============================================================================
# verify
# =============================================================================

@cli.command()
@click.argument("suite", type=click.Choice([s.value for s in SuiteName]))
@optional_config_option
@out_option
@click.pass_context
def verify(ctx: click.Context, suite: str, config_file: Optional[Path], out_dir: Path) -> None:
    """Run a verification suite (exit 1 if any check fails)."""
    _run_guarded(ctx, lambda: _verify(suite, config_file, out_dir))


def _verify(suite: str, config_file: Optional[Path], out_dir: Path) -> int:
    if config_file is not None:
        config = load_run_config(config_file)
        tol, outputs = config.tolerances, config.outputs
    else:
        tol, outputs = Tolerances(), OutputSpec()
    results = run_suite(suite, tol)
    passed = all(r.passed for r in results)
    save_json_report({
        "suite": suite,
        "passed": passed,
        "tolerances": tol.model_dump(),
        "results": [r.to_dict() for r in results],
    }, out_dir / outputs.verify_json)

    for result in results:
        status = "PASS" if result.passed else "FAIL"
        click.echo(f"{result.name}: {status} ({len(result.messages)} checks, "
                   f"{len(result.errors)} failures)")
        for message in result.errors:
            click.echo(f"  [{message.code}] {message.message}", err=True)
    return constants.EXIT_OK if passed else constants.EXIT_CHECK_FAILED


# =============================================================================
# dump-matrix
# =============================================================================

@cli.command("dump-matrix")
@config_option
@out_option
@click.option("--matrix", "matrix_kind", type=click.Choice([k.value for k in MatrixKind]),
              default=MatrixKind.J.value, show_default=True, help="Matrix to dump")
@click.option("--n", "n_size", type=click.IntRange(min=1), default=None,
              help="Ensemble size for J and f(J) (default: largest n in the config)")
@click.option("--rows", "row_range", type=(click.IntRange(min=0), click.IntRange(min=0)),
              default=(0, 9), show_default=True, help="First and last row (inclusive)")
@click.option("--cols", "col_range", type=(click.IntRange(min=0), click.IntRange(min=0)),
              default=(0, 9), show_default=True, help="First and last column (inclusive)")
@click.pass_context
def dump_matrix(ctx: click.Context, config_file: Path, out_dir: Path, matrix_kind: str,
                n_size: Optional[int], row_range: Tuple[int, int],
                col_range: Tuple[int, int]) -> None:
    """Write a window of one of the matrices as (row, col, value) CSV."""
    if row_range[1] < row_range[0] or col_range[1] < col_range[0]:
        raise click.BadParameter("window bounds must satisfy first <= last")
    _run_guarded(ctx, lambda: _dump_matrix(
        config_file, out_dir, MatrixKind(matrix_kind), n_size, row_range, col_range))


def build_matrix(config: RunConfig, kind: MatrixKind, n: int, rows: int) -> HessenbergMatrix:
    """The requested matrix exact on `rows` rows."""
    d = degree(config.f)
    path = path_from_spec(config.path_spec(), rows + d + 1)
    spec = config.family.with_n_scale(n)
    if kind == MatrixKind.J:
        return build_J(spec, path, rows)
    if kind == MatrixKind.F_OF_J:
        return polynomial_of_J(spec, path, config.f, rows)
    symbol = nevai_limits(config.family, _limit_direction(config, path))
    if kind == MatrixKind.TC:
        return build_Tc(symbol, path, rows)
    if kind == MatrixKind.T_COMPOSED:
        return build_T_composed(config.f, symbol, path, rows)
    window = compose_laurent_series(config.f, symbol, L=rows, certify_tail=False)
    return toeplitz_matrix(window, rows)


def _dump_matrix(config_file: Path, out_dir: Path, kind: MatrixKind, n_size: Optional[int],
                 row_range: Tuple[int, int], col_range: Tuple[int, int]) -> int:
    config = load_run_config(config_file)
    n = n_size or max(config.n_values)
    (i0, i1), (j0, j1) = row_range, col_range
    matrix = build_matrix(config, kind, n, i1 + 1)
    dump_matrix_window(matrix.window(i0, i1 + 1, j0, j1 + 1),
                       out_dir / config.outputs.matrix_csv, i0, i1, j0, j1)
    return constants.EXIT_OK


# =============================================================================
# oracle
# =============================================================================

@cli.command()
@config_option
@out_option
@click.pass_context
def oracle(ctx: click.Context, config_file: Path, out_dir: Path) -> None:
    """Enumerate a tiny discrete ensemble and compare with the matrix formulas."""
    _run_guarded(ctx, lambda: _oracle(config_file, out_dir))


def _oracle(config_file: Path, out_dir: Path) -> int:
    config = load_run_config(config_file)
    m_max = min(config.m_max, 4)
    r = m_max + constants.MGF_ORDER_MARGIN
    n_max = max(config.n_values)
    d = degree(config.f)
    path = path_from_spec(config.path_spec(), n_max + (r + 1) * max(d, 1) + 1)

    messages = []
    reports = []
    for n in config.n_values:
        found, exact, trace = oracle_checks(
            config.family, path, config.f, n, m_max, config.tolerances)
        messages.extend(found)
        reports.append({
            "n": n,
            "multiplicities": path.k(n).tolist(),
            "enumeration": exact.to_dict(),
            "trace": trace.to_dict(),
        })
    result = finish(SuiteName.ORACLE.value, messages)
    save_json_report({
        "family": family_spec_to_dict(config.family),
        "f": list(config.f),
        "passed": result.passed,
        "reports": reports,
        "checks": result.to_dict(),
    }, out_dir / config.outputs.oracle_json)

    click.echo(f"oracle: {'PASS' if result.passed else 'FAIL'} "
               f"({len(result.messages)} checks, {len(result.errors)} failures)")
    return constants.EXIT_OK if result.passed else constants.EXIT_CHECK_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main CLI entry point; returns the process exit code."""
    try:
        code = cli.main(args=list(argv) if argv is not None else None, prog_name="mopeclt",
                        standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return constants.EXIT_USAGE
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return constants.EXIT_USAGE
    return code if isinstance(code, int) else constants.EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
