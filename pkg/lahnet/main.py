# lahnet/main.py - command-line front-end for every verification
import functools
import json
from typing import Callable, Optional

import click

from lahnet import __version__
from lahnet.config import guard_lifted, settings
from lahnet.lah import (
    check_triple_agreement,
    format_triangle,
    lah_matrix,
    lah_recurrence_table,
    pascal_matrix,
    verify_polynomial_identity,
)
from lahnet.lgv import verify_lindstrom, verify_lindstrom_exhaustive
from lahnet.linalg import (
    ExactMatrix,
    IndexSet,
    format_matrix_text,
    matrix_to_csv,
    matrix_to_json,
    parse_matrix,
)
from lahnet.network import check_weight_matrix, lah_network, mutate_diagonal, to_dot, to_json, to_text, unit_network
from lahnet.tnn import check_variation_decreasing, is_totally_nonnegative, is_totally_positive
from lahnet.utils.constants import EXIT_CODES, MAX_ENTRY_BOUND, OUTPUT_FORMATS
from lahnet.utils.errors import GuardError, InvariantViolation, LahnetError
from lahnet.utils.logger import get_logger, setup_logging

# under the lahnet logger even when run as __main__
logger = get_logger(__name__)

FORMAT_OPTION = click.option(
    "--format",
    "fmt",
    type=click.Choice([OUTPUT_FORMATS["TEXT"], OUTPUT_FORMATS["JSON"]]),
    default=OUTPUT_FORMATS["TEXT"],
    show_default=True,
    help="Output format.",
)
FORCE_OPTION = click.option(
    "--force", is_flag=True, default=False, help="Lift enumeration guards (also LGV_GUARD_OVERRIDE)."
)


# ===== HELPERS =====
def _finish(ok: bool) -> None:
    ctx = click.get_current_context()
    ctx.exit(EXIT_CODES["OK"] if ok else EXIT_CODES["FALSIFIED"])


def _resolve_force(force: bool) -> bool:
    lifted = guard_lifted(force)
    if lifted:
        logger.warning("enumeration guards lifted")
        click.echo("warning: guards lifted, computations may be slow", err=True)
    return lifted


def _handle_errors(fmt_param: Optional[str] = "fmt") -> Callable:
    """Map library errors to exit codes: guard refusals to 3, bad input to 2, internal disagreements to 4."""

    def decorator(command: Callable) -> Callable:
        @functools.wraps(command)
        def wrapper(*args, **kwargs):
            try:
                return command(*args, **kwargs)
            except GuardError as e:
                _report_error(e, kwargs.get(fmt_param))
                click.get_current_context().exit(EXIT_CODES["GUARD"])
            except InvariantViolation as e:
                logger.error(f"internal cross-check failed: {e.message}")
                _report_error(e, kwargs.get(fmt_param))
                click.get_current_context().exit(EXIT_CODES["INTERNAL"])
            except LahnetError as e:
                _report_error(e, kwargs.get(fmt_param))
                click.get_current_context().exit(EXIT_CODES["USAGE"])

        return wrapper

    return decorator


def _report_error(error: LahnetError, fmt: Optional[str]) -> None:
    click.echo(f"error: {error.message}", err=True)
    if fmt == OUTPUT_FORMATS["JSON"]:
        click.echo(json.dumps(error.to_dict(), indent=2))


def _parse_index_set(ctx, param, value: Optional[str]) -> Optional[IndexSet]:
    if value is None:
        return None
    try:
        return IndexSet.parse(value)
    except LahnetError as e:
        raise click.BadParameter(e.message) from e


def _parse_matrix_option(ctx, param, value: Optional[str]) -> Optional[ExactMatrix]:
    if value is None:
        return None
    try:
        return parse_matrix(value)
    except LahnetError as e:
        raise click.BadParameter(e.message) from e


def _parse_mutation(ctx, param, value: Optional[str]):
    if value is None:
        return None
    try:
        row, col, weight = (int(v) for v in value.split(","))
    except ValueError as e:
        raise click.BadParameter("expected r,c,w") from e
    return row, col, weight


def _matrix_from_options(m: Optional[int], matrix: Optional[ExactMatrix]) -> ExactMatrix:
    if matrix is None:
        if m is None:
            raise click.UsageError("give --m or --matrix")
        return lah_matrix(m).matrix
    if m is not None and (matrix.rows != m or matrix.cols != m):
        raise click.UsageError(f"--matrix is {matrix.rows}x{matrix.cols}, not {m}x{m}")
    return matrix


# ===== COMMANDS =====
@click.group()
@click.version_option(__version__, prog_name="lahnet")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], case_sensitive=False),
    default=None,
    help="Override LOG_LEVEL for this run.",
)
def cli(log_level: Optional[str]) -> None:
    """Lah numbers, planar networks and total non-negativity in exact arithmetic."""
    setup_logging(log_level)


@cli.command()
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Matrix dimension.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice([OUTPUT_FORMATS["TEXT"], OUTPUT_FORMATS["JSON"], OUTPUT_FORMATS["CSV"]]),
    default=OUTPUT_FORMATS["TEXT"],
    show_default=True,
)
@click.option("--triangle", is_flag=True, default=False, help="Print rows as 'n: L(n,1) ... L(n,n)'.")
@_handle_errors()
def lah(n: int, fmt: str, triangle: bool) -> None:
    """Print the Lah matrix LM_n."""
    if triangle and fmt != OUTPUT_FORMATS["TEXT"]:
        raise click.UsageError("--triangle only applies to --format text")
    M = lah_matrix(n).matrix
    if fmt == OUTPUT_FORMATS["JSON"]:
        click.echo(matrix_to_json(M))
    elif fmt == OUTPUT_FORMATS["CSV"]:
        click.echo(matrix_to_csv(M), nl=False)
    elif triangle:
        click.echo(format_triangle(lah_recurrence_table(n)))
    else:
        click.echo(format_matrix_text(M))


@cli.command()
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Number of sources and sinks.")
@click.option("--unit", is_flag=True, default=False, help="All edge weights 1 (Pascal network).")
@click.option(
    "--format",
    "fmt",
    type=click.Choice([OUTPUT_FORMATS["TEXT"], OUTPUT_FORMATS["JSON"], OUTPUT_FORMATS["DOT"]]),
    default=OUTPUT_FORMATS["TEXT"],
    show_default=True,
)
@_handle_errors()
def network(n: int, unit: bool, fmt: str) -> None:
    """Serialize the network N_n."""
    N = unit_network(n) if unit else lah_network(n)
    if fmt == OUTPUT_FORMATS["DOT"]:
        click.echo(to_dot(N), nl=False)
    elif fmt == OUTPUT_FORMATS["JSON"]:
        click.echo(to_json(N))
    else:
        click.echo(to_text(N))


@cli.command("verify-theorem")
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--unit", is_flag=True, default=False, help="Check the unit network against the Pascal matrix.")
@click.option(
    "--mutate-edge",
    callback=_parse_mutation,
    default=None,
    metavar="R,C,W",
    help="Reweight the diagonal leaving u[R,C] to W before checking.",
)
@FORMAT_OPTION
@_handle_errors()
def verify_theorem(n: int, unit: bool, mutate_edge, fmt: str) -> None:
    """Compare the weight matrix of N_n with LM_n (or the Pascal matrix with --unit)."""
    N = unit_network(n) if unit else lah_network(n)
    if mutate_edge is not None:
        N = mutate_diagonal(N, *mutate_edge)
    if unit:
        report = check_weight_matrix(N, pascal_matrix(n), name="Pascal")
    else:
        report = check_weight_matrix(N, lah_matrix(n).matrix, name=f"LM_{n}")

    if fmt == OUTPUT_FORMATS["JSON"]:
        click.echo(report.to_json())
    elif report.equal:
        click.echo(f"PASS: weight matrix of N_{n} equals {report.expected}")
    else:
        d = report.first_difference
        click.echo(f"FAIL: cell ({d.row},{d.col}): expected {d.expected}, got {d.actual}")
    _finish(report.equal)


@cli.command()
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--rows", "I", callback=_parse_index_set, required=True, help="Source indices, e.g. 2,3.")
@click.option("--cols", "J", callback=_parse_index_set, required=True, help="Sink indices, e.g. 1,2.")
@click.option("--unit", is_flag=True, default=False)
@FORCE_OPTION
@FORMAT_OPTION
@_handle_errors()
def lgv(n: int, I: IndexSet, J: IndexSet, unit: bool, force: bool, fmt: str) -> None:
    """Check Lindstrom's lemma for one minor."""
    N = unit_network(n) if unit else lah_network(n)
    report = verify_lindstrom(N, I, J, force=_resolve_force(force))
    if fmt == OUTPUT_FORMATS["JSON"]:
        click.echo(report.to_json())
    else:
        verdict = "equal" if report.equal else "NOT equal"
        click.echo(
            f"I={I} J={J}: minor {report.minor}, family_sum {report.family_sum} "
            f"({report.family_count} families), {verdict}"
        )
    _finish(report.equal)


@cli.command("lgv-exhaustive")
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--max-size", type=click.IntRange(min=1), required=True)
@click.option("--unit", is_flag=True, default=False)
@FORCE_OPTION
@FORMAT_OPTION
@_handle_errors()
def lgv_exhaustive(n: int, max_size: int, unit: bool, force: bool, fmt: str) -> None:
    """Check Lindstrom's lemma for every (I, J) up to a size."""
    if max_size > n:
        raise click.BadParameter(f"--max-size cannot exceed --n ({n})", param_hint="--max-size")
    N = unit_network(n) if unit else lah_network(n)
    summary = verify_lindstrom_exhaustive(N, max_size, force=_resolve_force(force))
    if fmt == OUTPUT_FORMATS["JSON"]:
        click.echo(summary.to_json())
    else:
        click.echo(f"{summary.pairs_checked} pairs checked, {len(summary.failures)} failures")
        for failure in summary.failures:
            click.echo(
                f"  I={failure.I} J={failure.J}: minor {failure.minor}, family_sum {failure.family_sum}"
            )
    _finish(summary.all_equal)


@cli.command()
@click.option("--m", "m", type=click.IntRange(min=1), default=None)
@click.option("--matrix", callback=_parse_matrix_option, default=None, help='Explicit matrix, e.g. "0,1;1,0".')
@click.option("--positive", is_flag=True, default=False, help="Require every minor > 0 instead of >= 0.")
@FORCE_OPTION
@FORMAT_OPTION
@_handle_errors()
def tnn(m: Optional[int], matrix: Optional[ExactMatrix], positive: bool, force: bool, fmt: str) -> None:
    """Certify total non-negativity by enumerating every minor."""
    M = _matrix_from_options(m, matrix)
    check = is_totally_positive if positive else is_totally_nonnegative
    report = check(M, force=_resolve_force(force))
    if fmt == OUTPUT_FORMATS["JSON"]:
        click.echo(report.to_json())
    else:
        verdict = "holds" if report.is_tnn else "fails"
        click.echo(
            f"total {report.mode.value} check {verdict} after {report.checked_minor_count} minors"
        )
        if report.witness is not None:
            w = report.witness
            click.echo(f"witness: I={w.I} J={w.J} minor {w.value}")
    _finish(report.is_tnn)


@cli.command()
@click.option("--m", "m", type=click.IntRange(min=1), default=None)
@click.option("--matrix", callback=_parse_matrix_option, default=None)
@click.option("--samples", type=click.IntRange(min=1), default=settings.DEFAULT_SAMPLES, show_default=True)
@click.option("--seed", type=click.IntRange(min=0, max=2**64 - 1), default=settings.DEFAULT_SEED, show_default=True)
@click.option(
    "--entry-bound",
    type=click.IntRange(min=1, max=MAX_ENTRY_BOUND),
    default=settings.DEFAULT_ENTRY_BOUND,
    show_default=True,
)
@FORMAT_OPTION
@_handle_errors()
def varcheck(
    m: Optional[int], matrix: Optional[ExactMatrix], samples: int, seed: int, entry_bound: int, fmt: str
) -> None:
    """Sample Var-(Mx) <= Var-(x) on random integer vectors."""
    M = _matrix_from_options(m, matrix)
    report = check_variation_decreasing(M, samples, seed, entry_bound)
    if fmt == OUTPUT_FORMATS["JSON"]:
        click.echo(report.to_json())
    else:
        click.echo(
            f"{report.sample_count} samples (seed {report.seed}, {report.generator}): "
            f"violations {len(report.violations)}, max drop {report.max_drop}"
        )
        for v in report.violations[:10]:
            click.echo(f"  x={v.x} Var-(x)={v.var_x} Var-(Mx)={v.var_mx}")
    _finish(report.holds)


@cli.command()
@click.option("--n-max", type=click.IntRange(min=0), default=12, show_default=True)
@FORMAT_OPTION
@_handle_errors()
def identity(n_max: int, fmt: str) -> None:
    """Check the rising/falling factorial identity for every n up to n-max."""
    reports = [verify_polynomial_identity(n) for n in range(n_max + 1)]
    ok = all(r.holds for r in reports)
    if fmt == OUTPUT_FORMATS["JSON"]:
        click.echo(json.dumps([json.loads(r.to_json()) for r in reports], indent=2))
    else:
        for r in reports:
            if r.holds:
                click.echo(f"n={r.n}: holds")
            else:
                d = r.first_difference
                click.echo(f"n={r.n}: FAILS at x^{d.degree}: {d.lhs} vs {d.rhs}")
    _finish(ok)


@cli.command("enumerate")
@click.option("--n-max", type=click.IntRange(min=0), default=8, show_default=True)
@FORCE_OPTION
@FORMAT_OPTION
@_handle_errors()
def enumerate_routes(n_max: int, force: bool, fmt: str) -> None:
    """Compare recurrence, closed form and exhaustive enumeration."""
    report = check_triple_agreement(n_max, force=_resolve_force(force))
    if fmt == OUTPUT_FORMATS["JSON"]:
        click.echo(report.to_json())
    else:
        click.echo(
            f"{report.entries_checked} entries for n <= {n_max}: "
            f"{'all routes agree' if report.agree else f'{len(report.mismatches)} mismatches'}"
        )
    _finish(report.agree)


def main() -> None:
    cli(prog_name="lahnet")


if __name__ == "__main__":
    main()
