"""Analysis of LFRs: formal series, minimality, isomorphism and LPV-LFR structure."""

from lpvkit_core.lfr.equivalence import (
    equivalent_to_lpv_lfr,
    equivalent_to_lpv_lfr_by_minimization,
    forbidden_bases,
    lfr_difference_model,
    lfr_equivalence_horizon,
    lfr_formally_equivalent,
)
from lpvkit_core.lfr.isomorphism import find_lfr_isomorphism, search_lfr_isomorphism
from lpvkit_core.lfr.minimal import (
    LfrMinimality,
    is_minimal_lfr,
    minimize_lfr,
    project_lfr,
    reduce_lfr,
)
from lpvkit_core.lfr.reachability import (
    lfr_obs_matrices,
    lfr_reach_matrices,
    observable_bases,
    observable_ranks,
    reachable_bases,
    reachable_ranks,
)
from lpvkit_core.lfr.series import formal_io_coeff, lfr_series_table
from lpvkit_core.lfr.structure import StructureReport, is_lpv_lfr, lpv_structure_report

__all__ = [
    "LfrMinimality",
    "StructureReport",
    "equivalent_to_lpv_lfr",
    "equivalent_to_lpv_lfr_by_minimization",
    "find_lfr_isomorphism",
    "forbidden_bases",
    "formal_io_coeff",
    "is_lpv_lfr",
    "is_minimal_lfr",
    "lfr_difference_model",
    "lfr_equivalence_horizon",
    "lfr_formally_equivalent",
    "lfr_obs_matrices",
    "lfr_reach_matrices",
    "lfr_series_table",
    "lpv_structure_report",
    "minimize_lfr",
    "observable_bases",
    "observable_ranks",
    "project_lfr",
    "reachable_bases",
    "reachable_ranks",
    "reduce_lfr",
    "search_lfr_isomorphism",
]
