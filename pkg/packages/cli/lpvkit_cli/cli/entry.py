"""CLI entry point."""

import asyncio
from collections.abc import Callable, Sequence
from enum import StrEnum
from pathlib import Path
from typing import Any, TypeVar

import asyncclick as click
from rich.markup import escape
from rich.table import Table

from lpvkit_core.alpv import (
    AlpvMinimality,
    alpv_io_equivalent,
    is_minimal_alpv,
    minimize_alpv,
    search_alpv_isomorphism,
)
from lpvkit_core.config import KitSettings
from lpvkit_core.io import dump_model, format_table, read_model, read_table, write_model
from lpvkit_core.lfr import (
    LfrMinimality,
    equivalent_to_lpv_lfr,
    equivalent_to_lpv_lfr_by_minimization,
    is_minimal_lfr,
    lfr_formally_equivalent,
    lpv_structure_report,
    reduce_lfr,
    search_lfr_isomorphism,
)
from lpvkit_core.logging import LogEventType
from lpvkit_core.models import (
    AlpvModel,
    HarnessReport,
    InputSignal,
    IsomorphismStatus,
    LfrModel,
    ScheduleSignal,
)
from lpvkit_core.reference_models import ROUNDING_TOL, check_motivating_example
from lpvkit_core.simulation import SimulationEngine, simulate_outputs
from lpvkit_core.tracing import TracingConfig, setup_tracing, shutdown_tracing
from lpvkit_core.transform import (
    lfr_to_alpv,
    lpv_lfr_harness,
    lpv_lfr_io_equivalent,
    lpv_to_lfr_mr,
    theorem_harness,
)
from lpvkit_cli.cli.state import (
    EXIT_ERROR,
    EXIT_HOLDS,
    CliState,
    console,
    describe,
    guarded,
    verdict,
)

F = TypeVar("F", bound=Callable[..., Any])
ModelT = TypeVar("ModelT", AlpvModel, LfrModel)

_POSITIVE = click.FloatRange(min=0.0, min_open=True)
_FILE = click.Path(path_type=Path, dir_okay=False)


class Direction(StrEnum):
    ALPV_TO_LFR_MR = "alpv-to-lfr-mr"
    LFR_TO_ALPV = "lfr-to-alpv"


class CheckMode(StrEnum):
    MINIMAL = "minimal"
    EQUIV = "equiv"
    ISOMORPHIC = "isomorphic"
    LPV_STRUCTURE = "lpv-structure"
    LPV_EQUIV = "lpv-equiv"
    LPV_IO_EQUIV = "lpv-io-equiv"


ARITY = {
    CheckMode.MINIMAL: 1,
    CheckMode.EQUIV: 2,
    CheckMode.ISOMORPHIC: 2,
    CheckMode.LPV_STRUCTURE: 1,
    CheckMode.LPV_EQUIV: 1,
    CheckMode.LPV_IO_EQUIV: 2,
}


def tolerance_options(fn: F) -> F:
    """Attach --rel-tol, --abs-tol and --match-tol."""
    fn = click.option(
        "--match-tol", type=_POSITIVE, default=None, help="Coefficient/residual equality tolerance"
    )(fn)
    fn = click.option("--abs-tol", type=_POSITIVE, default=None, help="Absolute rank floor")(fn)
    fn = click.option("--rel-tol", type=_POSITIVE, default=None, help="Relative rank tolerance")(fn)
    return fn


def _expect(model: AlpvModel | LfrModel, kind: type[ModelT], path: Path) -> ModelT:
    if not isinstance(model, kind):
        wanted = "ALPV" if kind is AlpvModel else "LFR"
        raise click.UsageError(f"{path}: expected an {wanted} model, got {describe(model)}")
    return model


def _emit_model(model: AlpvModel | LfrModel, output: Path | None) -> None:
    if output is None:
        click.echo(dump_model(model))
    else:
        write_model(model, output)
        console.print(f"wrote {escape(str(output))}")


def _render(report: HarnessReport, title: str) -> None:
    table = Table(title=title)
    table.add_column("check")
    table.add_column("result")
    table.add_column("detail")
    for clause in report.clauses:
        mark = "[green]PASS[/]" if clause.holds else "[red]FAIL[/]"
        table.add_row(escape(clause.name), mark, escape(clause.detail))
    console.print(table)


@click.group(invoke_without_command=True)
@click.option("--version", "-v", is_flag=True, help="Show version")
@click.option("--log", "save_log", is_flag=True, help="Save a JSONL run log to the data directory")
@click.option("--config", "config_path", type=_FILE, default=None, help="Config file to load")
@click.option("--otlp-endpoint", default=None, help="Export tracing spans to this OTLP endpoint")
@click.pass_context
async def cli(
    ctx: click.Context,
    version: bool,
    save_log: bool,
    config_path: Path | None,
    otlp_endpoint: str | None,
) -> int:
    """lpvkit - realization theory for affine LPV models and LFRs.

    Examples:
        lpvkit convert sigma.json -o m.json --direction alpv-to-lfr-mr
        lpvkit check equiv m.json m_alt.json
        lpvkit minimize m.json -o m_min.json
        lpvkit motivating-example
    """
    if version:
        from lpvkit_cli import __version__
        from lpvkit_core import __version__ as core_version

        click.echo(f"lpvkit version {__version__} (core {core_version})")
        ctx.exit(EXIT_HOLDS)

    if otlp_endpoint:
        try:
            setup_tracing(TracingConfig(endpoint=otlp_endpoint))
        except ImportError as e:
            raise click.UsageError(str(e)) from e

    ctx.obj = CliState(settings=KitSettings.load(config_path), save_log=save_log)

    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())
    return EXIT_HOLDS


@cli.command()
@click.argument("source", type=_FILE)
@click.option(
    "--direction",
    type=click.Choice([d.value for d in Direction]),
    required=True,
    help="alpv-to-lfr-mr or lfr-to-alpv",
)
@click.option("--output", "-o", type=_FILE, default=None, help="Output file (default: stdout)")
@tolerance_options
@click.pass_obj
@guarded("convert")
async def convert(
    state: CliState,
    source: Path,
    direction: str,
    output: Path | None,
    rel_tol: float | None,
    abs_tol: float | None,
    match_tol: float | None,
) -> int:
    """Convert an ALPV to its MR LPV-LFR, or an LPV-LFR to its ALPV."""
    tol = state.tolerance(rel_tol, abs_tol, match_tol)
    model = read_model(source)

    result: AlpvModel | LfrModel
    if Direction(direction) == Direction.ALPV_TO_LFR_MR:
        sigma = _expect(model, AlpvModel, source)
        result = lpv_to_lfr_mr(sigma, tol)
        ranks = list(result.block_sizes[1:])
        console.print(f"{describe(sigma)} -> {describe(result)}, factor ranks {ranks}")
        state.logger.log(
            LogEventType.CONVERSION, direction, blocks=list(result.block_sizes), ranks=ranks
        )
    else:
        M = _expect(model, LfrModel, source)
        result = lfr_to_alpv(M, tol)
        console.print(f"{describe(M)} -> {describe(result)}")
        state.logger.log(LogEventType.CONVERSION, direction, n_x=result.n_x, n_p=result.n_p)

    _emit_model(result, output)
    return EXIT_HOLDS


@cli.command()
@click.argument("mode", type=click.Choice([m.value for m in CheckMode]))
@click.argument("files", nargs=-1, required=True, type=_FILE)
@tolerance_options
@click.pass_obj
@guarded("check")
async def check(
    state: CliState,
    mode: str,
    files: tuple[Path, ...],
    rel_tol: float | None,
    abs_tol: float | None,
    match_tol: float | None,
) -> int:
    """Decide a property of one or two model files.

    Prints "RESULT: <true|false> <detail>" and exits 0 when the property
    holds, 1 when it fails.
    """
    check_mode = CheckMode(mode)
    if len(files) != ARITY[check_mode]:
        raise click.UsageError(
            f"mode {mode} takes {ARITY[check_mode]} model file(s), got {len(files)}"
        )
    tol = state.tolerance(rel_tol, abs_tol, match_tol)
    settings = state.settings
    models = [read_model(f) for f in files]

    if check_mode == CheckMode.MINIMAL:
        model = models[0]
        if isinstance(model, AlpvModel):
            alpv_status = is_minimal_alpv(model, tol)
            return verdict(
                state,
                mode,
                alpv_status == AlpvMinimality.MINIMAL,
                f"{alpv_status.value} (n_x={model.n_x})",
            )
        lfr_status = is_minimal_lfr(model, tol)
        return verdict(
            state,
            mode,
            lfr_status == LfrMinimality.MINIMAL,
            f"{lfr_status.value} (blocks={list(model.block_sizes)})",
        )

    if check_mode == CheckMode.EQUIV:
        first, second = models
        if isinstance(first, AlpvModel):
            s2 = _expect(second, AlpvModel, files[1])
            holds = alpv_io_equivalent(first, s2, tol, settings.series_word_budget)
            return verdict(state, mode, holds, "input-output equivalence of ALPVs")
        M2 = _expect(second, LfrModel, files[1])
        holds = lfr_formally_equivalent(first, M2, tol, settings.series_word_budget)
        return verdict(state, mode, holds, "formal equivalence of LFRs")

    if check_mode == CheckMode.ISOMORPHIC:
        first, second = models
        if isinstance(first, AlpvModel):
            alpv_outcome = search_alpv_isomorphism(
                first,
                _expect(second, AlpvModel, files[1]),
                tol,
                settings.isomorphism_draws,
                settings.seed,
            )
            status, residual = alpv_outcome.status, alpv_outcome.residual
        else:
            lfr_outcome = search_lfr_isomorphism(
                first,
                _expect(second, LfrModel, files[1]),
                tol,
                settings.isomorphism_draws,
                settings.seed,
            )
            status, residual = lfr_outcome.status, lfr_outcome.residual
        state.logger.log(
            LogEventType.ISOMORPHISM_SEARCH, status.value, residual=float(residual)
        )
        return verdict(
            state,
            mode,
            status == IsomorphismStatus.FOUND,
            f"{status.value} (residual {residual:.3e})",
        )

    if check_mode == CheckMode.LPV_STRUCTURE:
        M = _expect(models[0], LfrModel, files[0])
        report = lpv_structure_report(M, tol)
        detail = report.note or f"largest F[i,j] entry with i,j > 1 is {report.worst_block:.3e}"
        return verdict(state, mode, report.is_lpv_lfr, detail, worst_block=report.worst_block)

    if check_mode == CheckMode.LPV_EQUIV:
        M = _expect(models[0], LfrModel, files[0])
        holds = equivalent_to_lpv_lfr(M, tol, settings.series_word_budget)
        cross = equivalent_to_lpv_lfr_by_minimization(M, tol)
        agreement = "agrees" if cross == holds else "disagrees"
        return verdict(state, mode, holds, f"minimization cross-check {agreement}", cross=cross)

    M1 = _expect(models[0], LfrModel, files[0])
    M2 = _expect(models[1], LfrModel, files[1])
    holds = lpv_lfr_io_equivalent(M1, M2, tol, settings.series_word_budget)
    return verdict(state, mode, holds, "input-output equivalence of the associated ALPVs")


@cli.command()
@click.argument("source", type=_FILE)
@click.option("--output", "-o", type=_FILE, default=None, help="Output file (default: stdout)")
@tolerance_options
@click.pass_obj
@guarded("minimize")
async def minimize(
    state: CliState,
    source: Path,
    output: Path | None,
    rel_tol: float | None,
    abs_tol: float | None,
    match_tol: float | None,
) -> int:
    """Reduce a model to a minimal one with the same behavior."""
    tol = state.tolerance(rel_tol, abs_tol, match_tol)
    model = read_model(source)
    reduced: AlpvModel | LfrModel
    if isinstance(model, AlpvModel):
        reduced, report = minimize_alpv(model, tol)
    else:
        reduced, report = reduce_lfr(model, tol)
    console.print(escape(report.summary()))
    state.logger.log(
        LogEventType.MINIMIZATION,
        report.summary(),
        before=report.original_dim,
        after=report.final_dim,
    )
    _emit_model(reduced, output)
    return EXIT_HOLDS


@cli.command()
@click.argument("source", type=_FILE)
@click.option("--input", "-u", "input_path", type=_FILE, required=True, help="Input table")
@click.option(
    "--schedule", "-p", "schedule_path", type=_FILE, default=None, help="Schedule table (default 0)"
)
@click.option(
    "--engine",
    type=click.Choice([e.value for e in SimulationEngine]),
    default=SimulationEngine.DIRECT.value,
    help="direct (ALPV), loop (LPV-LFR) or series (truncated word series)",
)
@click.option(
    "--horizon",
    "word_horizon",
    type=click.IntRange(min=0),
    default=None,
    help="Word length for the series engine (default: exact for the signal length)",
)
@click.option("--output", "-o", type=_FILE, default=None, help="Output file (default: stdout)")
@tolerance_options
@click.pass_obj
@guarded("simulate")
async def simulate(
    state: CliState,
    source: Path,
    input_path: Path,
    schedule_path: Path | None,
    engine: str,
    word_horizon: int | None,
    output: Path | None,
    rel_tol: float | None,
    abs_tol: float | None,
    match_tol: float | None,
) -> int:
    """Simulate a model from zero initial state; prints rows "t y_1 ... y_p"."""
    tol = state.tolerance(rel_tol, abs_tol, match_tol)
    model = read_model(source)
    if isinstance(model, AlpvModel):
        n_u, n_p = model.n_u, model.n_p
    else:
        n_u, n_p = model.m, model.d - 1

    u = InputSignal(read_table(input_path, width=n_u))
    if schedule_path is None:
        p = ScheduleSignal.zeros(u.horizon, n_p)
    else:
        p = ScheduleSignal(read_table(schedule_path, width=n_p))

    y = simulate_outputs(model, u, p, SimulationEngine(engine), word_horizon, tol)
    state.logger.log(LogEventType.SIMULATION, engine, steps=u.horizon, outputs=int(y.shape[1]))
    text = format_table(y)
    if output is None:
        click.echo(text, nl=False)
    else:
        output.write_text(text, encoding="utf-8")
        console.print(f"wrote {u.horizon} rows to {escape(str(output))}")
    return EXIT_HOLDS


@cli.command("motivating-example")
@click.option(
    "--rounding-tol",
    type=_POSITIVE,
    default=ROUNDING_TOL,
    show_default=True,
    help="Match tolerance for checks against the rounded four-state LFR",
)
@tolerance_options
@click.pass_obj
@guarded("motivating-example")
async def motivating_example(
    state: CliState,
    rounding_tol: float,
    rel_tol: float | None,
    abs_tol: float | None,
    match_tol: float | None,
) -> int:
    """Rebuild the motivating example and check every claim about it."""
    settings = state.settings
    report = check_motivating_example(
        state.tolerance(rel_tol, abs_tol, match_tol),
        rounding_tol,
        settings.series_word_budget,
        settings.isomorphism_draws,
        settings.seed,
    )
    _render(report, "Motivating example")
    passed = sum(c.holds for c in report.clauses)
    return verdict(
        state, "motivating-example", report.all_hold, f"{passed}/{len(report.clauses)} PASS"
    )


@cli.command()
@click.argument("first", type=_FILE)
@click.argument("second", type=_FILE)
@tolerance_options
@click.pass_obj
@guarded("harness")
async def harness(
    state: CliState,
    first: Path,
    second: Path,
    rel_tol: float | None,
    abs_tol: float | None,
    match_tol: float | None,
) -> int:
    """Cross-check the ALPV <-> LPV-LFR correspondences on two models of the same kind."""
    tol = state.tolerance(rel_tol, abs_tol, match_tol)
    settings = state.settings
    a, b = read_model(first), read_model(second)
    if isinstance(a, AlpvModel):
        report = theorem_harness(
            a,
            _expect(b, AlpvModel, second),
            tol,
            settings.series_word_budget,
            settings.isomorphism_draws,
            settings.seed,
        )
    else:
        report = lpv_lfr_harness(
            a,
            _expect(b, LfrModel, second),
            tol,
            settings.series_word_budget,
            settings.isomorphism_draws,
            settings.seed,
        )
    _render(report, "Correspondence harness")
    passed = sum(c.holds for c in report.clauses)
    detail = f"{passed}/{len(report.clauses)} clauses hold"
    return verdict(state, "harness", report.all_hold, detail)


@cli.command()
@click.option("--default", "show_default", is_flag=True, help="Print a default config file")
@click.pass_obj
async def config(state: CliState, show_default: bool) -> int:
    """Show the effective numerical settings."""
    if show_default:
        click.echo(KitSettings.get_default_config_content(), nl=False)
        return EXIT_HOLDS
    for name, value in state.settings.model_dump().items():
        click.echo(f"{name} = {value}")
    return EXIT_HOLDS


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return its exit code."""
    args = list(argv) if argv is not None else None
    try:
        rv = asyncio.run(cli.main(args=args, prog_name="lpvkit", standalone_mode=False))
    except click.ClickException as e:
        e.show()
        return EXIT_ERROR
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_ERROR
    finally:
        shutdown_tracing()
    return rv if isinstance(rv, int) else EXIT_HOLDS
