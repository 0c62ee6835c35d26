"""Per-invocation state shared by the commands: settings, run log, exit codes."""

import functools
from collections.abc import Awaitable, Callable
from dataclasses import dataclass, field
from typing import Any, Concatenate, ParamSpec

import asyncclick as click
from rich.console import Console
from rich.markup import escape

from lpvkit_core.config import KitSettings
from lpvkit_core.errors import LpvKitError, NotLpvLfrError
from lpvkit_core.logging import RunLogger
from lpvkit_core.models import AlpvModel, LfrModel
from lpvkit_core.numerics import RankTolerance
from lpvkit_core.tracing import SpanAttributes, get_tracer

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_ERROR = 2
EXIT_NOT_LPV_LFR = 3

# Human-readable reports go to stderr so stdout stays machine-parseable
console = Console(stderr=True)

P = ParamSpec("P")

_tracer = get_tracer("lpvkit.cli")


@dataclass
class CliState:
    settings: KitSettings
    logger: RunLogger = field(default_factory=RunLogger)
    save_log: bool = False

    def tolerance(
        self,
        rel_tol: float | None = None,
        abs_tol: float | None = None,
        match_tol: float | None = None,
    ) -> RankTolerance:
        """Settings tolerance with per-command flag overrides."""
        base = self.settings.tolerance()
        return RankTolerance(
            rel_tol=rel_tol if rel_tol is not None else base.rel_tol,
            abs_tol=abs_tol if abs_tol is not None else base.abs_tol,
            match_tol=match_tol if match_tol is not None else base.match_tol,
        )

    def finish(self, exit_code: int) -> None:
        self.logger.end_run(exit_code)
        if self.save_log:
            path = self.logger.save()
            console.print(f"[dim]run log: {escape(str(path))}[/]")


def guarded(
    name: str,
) -> Callable[
    [Callable[Concatenate[CliState, P], Awaitable[int]]],
    Callable[Concatenate[CliState, P], Awaitable[int]],
]:
    """Run a command inside a logged run and map library errors to exit codes."""

    def decorate(
        fn: Callable[Concatenate[CliState, P], Awaitable[int]],
    ) -> Callable[Concatenate[CliState, P], Awaitable[int]]:
        @functools.wraps(fn)
        async def wrapper(state: CliState, *args: P.args, **kwargs: P.kwargs) -> int:
            state.logger.start_run(name)
            with _tracer.start_as_current_span(f"cli.{name}") as span:
                span.set_attribute(SpanAttributes.COMMAND, name)
                try:
                    code = await fn(state, *args, **kwargs)
                except NotLpvLfrError as e:
                    code = _report_error(state, e, EXIT_NOT_LPV_LFR)
                    _mark_span(span, e)
                except LpvKitError as e:
                    code = _report_error(state, e, EXIT_ERROR)
                    _mark_span(span, e)
                except click.ClickException as e:
                    state.logger.log_error(e.format_message())
                    e.show()
                    code = EXIT_ERROR
                    _mark_span(span, e)
                span.set_attribute(SpanAttributes.EXIT_CODE, code)
            state.finish(code)
            return code

        return wrapper

    return decorate


def _mark_span(span: Any, error: Exception) -> None:
    span.set_attribute(SpanAttributes.ERROR_TYPE, type(error).__name__)
    span.set_attribute(SpanAttributes.ERROR_MESSAGE, str(error))
    span.record_exception(error)


def _report_error(state: CliState, error: LpvKitError, code: int) -> int:
    state.logger.log_error(str(error), error_type=type(error).__name__)
    console.print(f"[red]error:[/] {escape(str(error))}", highlight=False, soft_wrap=True)
    return code


def verdict(state: CliState, mode: str, holds: bool, detail: str = "", **metadata: Any) -> int:
    """Print the ``RESULT:`` line, log it and return the matching exit code."""
    entry = state.logger.log_check(mode, holds, detail)
    entry.metadata.update(metadata)
    click.echo(f"RESULT: {'true' if holds else 'false'} {detail}".rstrip())
    return EXIT_HOLDS if holds else EXIT_FAILS


def describe(model: AlpvModel | LfrModel) -> str:
    if isinstance(model, AlpvModel):
        return f"ALPV (n_p={model.n_p}, n_x={model.n_x}, n_u={model.n_u}, n_y={model.n_y})"
    return f"LFR (d={model.d}, blocks={list(model.block_sizes)}, m={model.m}, p={model.p})"
