"""Analysis of affine LPV models: reachability, minimality, Markov parameters, simulation."""

from lpvkit_core.alpv.equivalence import (
    alpv_difference_model,
    alpv_equivalence_horizon,
    alpv_io_equivalent,
)
from lpvkit_core.alpv.isomorphism import find_alpv_isomorphism, search_alpv_isomorphism
from lpvkit_core.alpv.markov import alpv_markov_parameter, alpv_markov_table
from lpvkit_core.alpv.minimal import AlpvMinimality, is_minimal_alpv, minimize_alpv
from lpvkit_core.alpv.reachability import (
    alpv_obs_matrix,
    alpv_reach_matrix,
    observable_basis,
    observable_rank,
    reachable_basis,
    reachable_rank,
)
from lpvkit_core.alpv.simulate import simulate_alpv

__all__ = [
    "AlpvMinimality",
    "alpv_difference_model",
    "alpv_equivalence_horizon",
    "alpv_io_equivalent",
    "alpv_markov_parameter",
    "alpv_markov_table",
    "alpv_obs_matrix",
    "alpv_reach_matrix",
    "find_alpv_isomorphism",
    "is_minimal_alpv",
    "minimize_alpv",
    "observable_basis",
    "observable_rank",
    "reachable_basis",
    "reachable_rank",
    "search_alpv_isomorphism",
    "simulate_alpv",
]
