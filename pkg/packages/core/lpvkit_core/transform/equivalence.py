"""Input-output equivalence of LPV-LFRs through their associated ALPVs."""

from lpvkit_core.alpv.equivalence import alpv_io_equivalent
from lpvkit_core.errors import DimensionMismatchError
from lpvkit_core.models import LfrModel
from lpvkit_core.numerics import DEFAULT_TOLERANCE, RankTolerance
from lpvkit_core.transform.conversion import lfr_to_alpv


def lpv_lfr_io_equivalent(
    M1: LfrModel,
    M2: LfrModel,
    tol: RankTolerance = DEFAULT_TOLERANCE,
    word_budget: int = 4096,
) -> bool:
    """Input-output equivalence of the ALPVs associated with two LPV-LFRs.

    Always agrees with lfr_formally_equivalent on LPV-LFRs.

    Raises:
        NotLpvLfrError: If either model is not an LPV-LFR.
        DimensionMismatchError: If (p, m, d) differ.
    """
    if M1.signature != M2.signature:
        raise DimensionMismatchError(M1.signature, M2.signature, "(p, m, d)")
    return alpv_io_equivalent(lfr_to_alpv(M1, tol), lfr_to_alpv(M2, tol), tol, word_budget)
