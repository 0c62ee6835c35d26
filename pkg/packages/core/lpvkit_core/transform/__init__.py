"""ALPV <-> LFR transformations, equivalence deciders, harness and identifiability."""

from lpvkit_core.transform.conversion import (
    FactorPair,
    lfr_factor_pairs,
    lfr_to_alpv,
    lpv_to_lfr,
    lpv_to_lfr_mr,
    mr_factor_pairs,
)
from lpvkit_core.transform.equivalence import lpv_lfr_io_equivalent
from lpvkit_core.transform.harness import lpv_lfr_harness, theorem_harness
from lpvkit_core.transform.identifiability import (
    IdentifiabilityReport,
    PairVerdict,
    ParametrizationSample,
    SampleEntry,
    identifiability_falsify,
)

__all__ = [
    "FactorPair",
    "IdentifiabilityReport",
    "PairVerdict",
    "ParametrizationSample",
    "SampleEntry",
    "identifiability_falsify",
    "lfr_factor_pairs",
    "lfr_to_alpv",
    "lpv_lfr_harness",
    "lpv_lfr_io_equivalent",
    "lpv_to_lfr",
    "lpv_to_lfr_mr",
    "mr_factor_pairs",
    "theorem_harness",
]
