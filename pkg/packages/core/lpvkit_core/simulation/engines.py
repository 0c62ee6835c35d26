"""Uniform entry point over the three simulators."""

from enum import StrEnum

from lpvkit_core.alpv.simulate import simulate_alpv
from lpvkit_core.models import AlpvModel, InputSignal, LfrModel, ScheduleSignal
from lpvkit_core.numerics import DEFAULT_TOLERANCE, Matrix, RankTolerance
from lpvkit_core.simulation.loop import simulate_lpv_lfr
from lpvkit_core.simulation.star import truncated_star_series
from lpvkit_core.tracing import SpanAttributes, get_tracer
from lpvkit_core.transform.conversion import lfr_to_alpv, lpv_to_lfr_mr

_tracer = get_tracer("lpvkit.simulation")


class SimulationEngine(StrEnum):
    DIRECT = "direct"
    LOOP = "loop"
    SERIES = "series"


def simulate_outputs(
    model: AlpvModel | LfrModel,
    u: InputSignal,
    p: ScheduleSignal,
    engine: SimulationEngine = SimulationEngine.DIRECT,
    word_horizon: int | None = None,
    tol: RankTolerance = DEFAULT_TOLERANCE,
) -> Matrix:
    """Outputs ``y(0..K-1)`` from zero initial conditions.

    ``direct`` runs the ALPV recursion (converting an LPV-LFR first);
    ``loop`` and ``series`` run on the LPV-LFR (MR-converting an ALPV first).
    """
    with _tracer.start_as_current_span("simulation.run") as span:
        span.set_attribute(SpanAttributes.SIM_ENGINE, engine.value)
        span.set_attribute(SpanAttributes.SIM_STEPS, u.horizon)
        if engine == SimulationEngine.DIRECT:
            sigma = model if isinstance(model, AlpvModel) else lfr_to_alpv(model, tol)
            return simulate_alpv(sigma, u, p).y
        M = model if isinstance(model, LfrModel) else lpv_to_lfr_mr(model, tol)
        if engine == SimulationEngine.LOOP:
            return simulate_lpv_lfr(M, u, p, tol).y
        return truncated_star_series(M, u, p, word_horizon, tol)
