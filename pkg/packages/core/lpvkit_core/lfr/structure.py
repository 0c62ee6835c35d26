"""LPV-LFR structure: ``F_{i,j} = 0`` whenever ``i > 1`` and ``j > 1``."""

from pydantic import BaseModel

from lpvkit_core.models import LfrModel, canonical_partition
from lpvkit_core.numerics import DEFAULT_TOLERANCE, RankTolerance, max_abs


class StructureReport(BaseModel):
    """Verdict of the LPV-LFR structure test.

    ``worst_block`` is the largest magnitude found in a block that must
    vanish, ``worst_index`` its 1-based channel pair.
    """

    is_lpv_lfr: bool
    d: int
    worst_block: float = 0.0
    worst_index: tuple[int, int] | None = None
    threshold: float = 0.0
    note: str = ""


def lpv_structure_report(M: LfrModel, tol: RankTolerance = DEFAULT_TOLERANCE) -> StructureReport:
    """Inspect every F_{i,j} block with i, j > 1.

    Blocks count as zero when their entries stay below match_tol scaled by
    the largest entry of A.
    """
    if M.d == 1:
        return StructureReport(is_lpv_lfr=False, d=1, note="d = 1: not an LPV-LFR by definition")

    part = canonical_partition(M)
    threshold = tol.match_tol * max(1.0, max_abs(M.A))
    worst = 0.0
    where: tuple[int, int] | None = None
    for i in range(1, M.d):
        for j in range(1, M.d):
            size = max_abs(part.F[i][j])
            if size > worst:
                worst, where = size, (i + 1, j + 1)

    holds = worst <= threshold
    note = ""
    if not holds and where is not None:
        note = f"F[{where[0]},{where[1]}] has entries up to {worst:.3e}"
    return StructureReport(
        is_lpv_lfr=holds,
        d=M.d,
        worst_block=worst,
        worst_index=where,
        threshold=threshold,
        note=note,
    )


def is_lpv_lfr(M: LfrModel, tol: RankTolerance = DEFAULT_TOLERANCE) -> bool:
    """Whether M is an LPV-LFR (requires d > 1)."""
    return lpv_structure_report(M, tol).is_lpv_lfr
