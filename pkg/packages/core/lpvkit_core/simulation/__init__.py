"""Time-domain cross-validation: ALPV recursion, LFR loop, truncated star series."""

from lpvkit_core.alpv.simulate import simulate_alpv
from lpvkit_core.simulation.engines import SimulationEngine, simulate_outputs
from lpvkit_core.simulation.loop import require_lpv_lfr, simulate_lpv_lfr
from lpvkit_core.simulation.star import exact_word_horizon, truncated_star_series

__all__ = [
    "SimulationEngine",
    "exact_word_horizon",
    "require_lpv_lfr",
    "simulate_alpv",
    "simulate_lpv_lfr",
    "simulate_outputs",
    "truncated_star_series",
]
