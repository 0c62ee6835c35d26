"""Executable checks of the ALPV <-> LPV-LFR correspondence on concrete models.

Each clause compares two independently computed verdicts. A failing clause
points at a numerical problem (or a tolerance too tight for the data),
since the correspondences hold exactly.
"""

from lpvkit_core.alpv import (
    AlpvMinimality,
    alpv_io_equivalent,
    is_minimal_alpv,
    search_alpv_isomorphism,
)
from lpvkit_core.lfr import (
    LfrMinimality,
    is_minimal_lfr,
    lfr_formally_equivalent,
    search_lfr_isomorphism,
)
from lpvkit_core.models import AlpvModel, HarnessReport, LfrModel
from lpvkit_core.numerics import DEFAULT_TOLERANCE, RankTolerance, max_abs
from lpvkit_core.tracing import SpanAttributes, get_tracer
from lpvkit_core.transform.conversion import lfr_to_alpv, lpv_to_lfr_mr
from lpvkit_core.transform.equivalence import lpv_lfr_io_equivalent

_tracer = get_tracer("lpvkit.transform")

ROUND_TRIP_TOL = 1e-10


def theorem_harness(
    s1: AlpvModel,
    s2: AlpvModel,
    tol: RankTolerance = DEFAULT_TOLERANCE,
    word_budget: int = 4096,
    draws: int = 32,
    seed: int = 0,
) -> HarnessReport:
    """Check the ALPV -> LPV-LFR claims on s1, s2 and their MR transforms M1, M2.

    Biconditionals: minimality of each model, input-output vs formal
    equivalence, isomorphism. Round trips: the ALPV associated with each M_k
    is s_k. The LPV-LFR -> ALPV clauses of lpv_lfr_harness are appended.
    """
    with _tracer.start_as_current_span("transform.theorem_harness") as span:
        M1, M2 = lpv_to_lfr_mr(s1, tol), lpv_to_lfr_mr(s2, tol)
        report = HarnessReport()

        for k, (s, M) in enumerate(((s1, M1), (s2, M2)), start=1):
            lhs = is_minimal_alpv(s, tol) == AlpvMinimality.MINIMAL
            rhs = is_minimal_lfr(M, tol) == LfrMinimality.MINIMAL
            report.add(
                f"minimality[{k}]",
                lhs == rhs,
                lhs,
                rhs,
                f"ALPV dim {s.n_x}, LFR blocks {list(M.block_sizes)}",
            )

        lhs = alpv_io_equivalent(s1, s2, tol, word_budget)
        rhs = lfr_formally_equivalent(M1, M2, tol, word_budget)
        report.add("io_equivalence", lhs == rhs, lhs, rhs)

        alpv_iso = search_alpv_isomorphism(s1, s2, tol, draws, seed)
        lfr_iso = search_lfr_isomorphism(M1, M2, tol, draws, seed)
        report.add(
            "isomorphism",
            alpv_iso.found == lfr_iso.found,
            alpv_iso.found,
            lfr_iso.found,
            f"ALPV search {alpv_iso.status.value}, LFR search {lfr_iso.status.value}",
        )

        for k, (s, M) in enumerate(((s1, M1), (s2, M2)), start=1):
            deviation = lfr_to_alpv(M, tol).max_deviation(s)
            scale = max([1.0, *(max_abs(X) for X in (*s.A, *s.B, *s.C, *s.D))])
            report.add(
                f"round_trip[{k}]",
                deviation <= ROUND_TRIP_TOL * scale,
                detail=f"max deviation {deviation:.3e}",
            )

        report.clauses.extend(lpv_lfr_harness(M1, M2, tol, word_budget, draws, seed).clauses)
        span.set_attribute(SpanAttributes.VERDICT, report.all_hold)
        return report


def lpv_lfr_harness(
    M1: LfrModel,
    M2: LfrModel,
    tol: RankTolerance = DEFAULT_TOLERANCE,
    word_budget: int = 4096,
    draws: int = 32,
    seed: int = 0,
) -> HarnessReport:
    """Check the LPV-LFR -> ALPV claims on two LPV-LFRs.

    - a minimal M has a minimal associated ALPV;
    - formal equivalence of M1, M2 iff input-output equivalence of their ALPVs;
    - M1 isomorphic to M2 implies their ALPVs are isomorphic;
    - M is formally equivalent to the MR transform of its ALPV, and when M is
      minimal that transform is minimal and isomorphic to M.

    Raises:
        NotLpvLfrError: If either model is not an LPV-LFR.
    """
    s1, s2 = lfr_to_alpv(M1, tol), lfr_to_alpv(M2, tol)
    report = HarnessReport()

    for k, (M, s) in enumerate(((M1, s1), (M2, s2)), start=1):
        lhs = is_minimal_lfr(M, tol) == LfrMinimality.MINIMAL
        rhs = is_minimal_alpv(s, tol) == AlpvMinimality.MINIMAL
        report.add(f"minimal_lfr_gives_minimal_alpv[{k}]", not lhs or rhs, lhs, rhs)

    lhs = lfr_formally_equivalent(M1, M2, tol, word_budget)
    rhs = lpv_lfr_io_equivalent(M1, M2, tol, word_budget)
    report.add("formal_iff_io_equivalence", lhs == rhs, lhs, rhs)

    lhs = search_lfr_isomorphism(M1, M2, tol, draws, seed).found
    rhs = search_alpv_isomorphism(s1, s2, tol, draws, seed).found
    report.add("isomorphic_lfrs_give_isomorphic_alpvs", not lhs or rhs, lhs, rhs)

    for k, (M, s) in enumerate(((M1, s1), (M2, s2)), start=1):
        rebuilt = lpv_to_lfr_mr(s, tol)
        equivalent = lfr_formally_equivalent(M, rebuilt, tol, word_budget)
        report.add(
            f"mr_of_alpv_equivalent[{k}]", equivalent, detail=f"blocks {list(rebuilt.block_sizes)}"
        )

        minimal = is_minimal_lfr(M, tol) == LfrMinimality.MINIMAL
        if minimal:
            rebuilt_minimal = is_minimal_lfr(rebuilt, tol) == LfrMinimality.MINIMAL
            isomorphic = search_lfr_isomorphism(M, rebuilt, tol, draws, seed).found
            holds = rebuilt_minimal and isomorphic
        else:
            rebuilt_minimal = isomorphic = False
            holds = True
        report.add(
            f"mr_of_alpv_isomorphic[{k}]",
            holds,
            minimal,
            rebuilt_minimal and isomorphic,
            "vacuous: M not minimal" if not minimal else "",
        )
    return report
