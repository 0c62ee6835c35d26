"""Value types for ALPV and LFR models."""

from lpvkit_core.models.alpv import AlpvModel
from lpvkit_core.models.isomorphism import (
    AlpvIsomorphism,
    LfrIsomorphism,
    alpv_isomorphism_residual,
    apply_alpv_isomorphism,
    apply_lfr_isomorphism,
    lfr_isomorphism_residual,
)
from lpvkit_core.models.lfr import CanonicalPartition, LfrModel, assemble_lfr, canonical_partition
from lpvkit_core.models.reports import (
    ClauseResult,
    HarnessReport,
    IsomorphismOutcome,
    IsomorphismStatus,
    ReductionReport,
)
from lpvkit_core.models.series import SeriesTable
from lpvkit_core.models.signals import InputSignal, ScheduleSignal, Trajectory, check_signals
from lpvkit_core.models.words import (
    EMPTY_WORD,
    Word,
    admissible_word,
    count_words,
    format_word,
    index_sequence,
    is_admissible,
    validate_word,
    words_up_to,
)

__all__ = [
    "EMPTY_WORD",
    "AlpvIsomorphism",
    "AlpvModel",
    "CanonicalPartition",
    "ClauseResult",
    "HarnessReport",
    "InputSignal",
    "IsomorphismOutcome",
    "IsomorphismStatus",
    "LfrIsomorphism",
    "LfrModel",
    "ReductionReport",
    "ScheduleSignal",
    "SeriesTable",
    "Trajectory",
    "Word",
    "admissible_word",
    "alpv_isomorphism_residual",
    "apply_alpv_isomorphism",
    "apply_lfr_isomorphism",
    "assemble_lfr",
    "canonical_partition",
    "check_signals",
    "count_words",
    "format_word",
    "index_sequence",
    "is_admissible",
    "lfr_isomorphism_residual",
    "validate_word",
    "words_up_to",
]
