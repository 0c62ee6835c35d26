"""Reference models used by the acceptance checks, the CLI and the tests.

The motivating example is a two-state ALPV with one scheduling coordinate
together with three LFRs built from it: two non-isomorphic five-state
LPV-LFRs and a four-state LPV-LFR whose entries were rounded to four
significant digits.
"""

from collections.abc import Sequence

from lpvkit_core.alpv import AlpvMinimality, alpv_obs_matrix, alpv_reach_matrix, is_minimal_alpv
from lpvkit_core.lfr import (
    LfrMinimality,
    is_minimal_lfr,
    lfr_formally_equivalent,
    minimize_lfr,
    search_lfr_isomorphism,
)
from lpvkit_core.models import AlpvModel, HarnessReport, LfrModel
from lpvkit_core.numerics import DEFAULT_TOLERANCE, RankTolerance, numerical_rank
from lpvkit_core.tracing import SpanAttributes, get_tracer
from lpvkit_core.transform import lpv_to_lfr_mr

_tracer = get_tracer("lpvkit.reference")

#: Tolerance for checks on the rounded four-state LFR.
ROUNDING_TOL = 5e-3


def motivating_alpv() -> AlpvModel:
    """Two-state, single-coordinate ALPV with D = 0."""
    return AlpvModel.from_matrices(
        A=[[[1.0, 0.0], [0.0, 0.2]], [[0.0, 2.0], [1.0, 1.0]]],
        B=[[[1.0], [0.0]], [[0.0], [1.0]]],
        C=[[[1.0, 0.0]], [[0.0, 1.0]]],
    )


def motivating_lfr() -> LfrModel:
    """Five-state LPV-LFR with blocks {2, 3} realizing the motivating ALPV."""
    return LfrModel.from_matrices(
        (2, 3),
        A=[
            [1.0, 0.0, 1.0, 0.0, 1.0],
            [0.0, 0.2, 1.0, 0.0, 0.0],
            [1.0, 1.0, 0.0, 0.0, 0.0],
            [0.0, 2.0, 0.0, 0.0, 0.0],
            [-1.0, 1.0, 0.0, 0.0, 0.0],
        ],
        B=[[1.0], [0.0], [1.0], [200.0], [-1.0]],
        C=[[1.0, 0.0, 0.5, 0.0, 0.5]],
    )


def motivating_lfr_alt() -> LfrModel:
    """Second five-state LPV-LFR for the same ALPV, not isomorphic to motivating_lfr()."""
    return LfrModel.from_matrices(
        (2, 3),
        A=[
            [1.0, 0.0, 0.0, 1.0, 0.0],
            [0.0, 0.2, 1.0, 0.0, 0.0],
            [1.0, 1.0, 0.0, 0.0, 0.0],
            [0.0, 2.0, 0.0, 0.0, 0.0],
            [0.0, -2.0, 0.0, 0.0, 0.0],
        ],
        B=[[1.0], [0.0], [1.0], [0.0], [1.0]],
        C=[[1.0, 0.0, 0.0, 0.5, 0.0]],
    )


def rounded_minimal_lfr() -> LfrModel:
    """Four-state LPV-LFR with blocks {2, 2}; entries are rounded, compare with ROUNDING_TOL."""
    return LfrModel.from_matrices(
        (2, 2),
        A=[
            [1.0, 0.0, -1.196, 0.5429],
            [0.0, 0.2, -0.8668, -0.9364],
            [-0.3413, -1.519, 0.0, 0.0],
            [-0.752, 0.338, 0.0, 0.0],
        ],
        B=[[1.0], [0.0], [-0.3413], [-0.752]],
        C=[[1.0, 0.0, -0.598, 0.2714]],
    )


def scaling_parametrization(theta: Sequence[float] | float, compensate: bool = True) -> AlpvModel:
    """One-parameter ALPV family used for identifiability checks.

    The input gain of the first state is ``theta``. With ``compensate`` the
    output gain of that state is ``1 / theta``, so every nonzero theta gives
    the same input-output behavior (``diag(theta, 1)`` is an isomorphism).
    Without it the family is identifiable.
    """
    t = float(theta if isinstance(theta, int | float) else theta[0])
    c0 = 1.0 / t if compensate else 1.0
    return AlpvModel.from_matrices(
        A=[[[0.5, 0.0], [0.0, 0.2]], [[0.3, 0.0], [0.0, 0.1]]],
        B=[[[t], [0.0]], [[0.0], [1.0]]],
        C=[[[c0, 0.0]], [[0.0, 1.0]]],
    )


def check_motivating_example(
    tol: RankTolerance = DEFAULT_TOLERANCE,
    rounding_tol: float = ROUNDING_TOL,
    word_budget: int = 4096,
    draws: int = 32,
    seed: int = 0,
) -> HarnessReport:
    """Verify the claims made about the motivating example.

    The two five-state LFRs are formally equivalent but not isomorphic, the
    ALPV is minimal, its MR transform has blocks {2, 2}, is minimal and is
    equivalent and isomorphic to the rounded four-state LFR within
    ``rounding_tol``.
    """
    with _tracer.start_as_current_span("reference.motivating_example") as span:
        sigma = motivating_alpv()
        M, M_alt, M_hat = motivating_lfr(), motivating_lfr_alt(), rounded_minimal_lfr()
        rounded = tol.with_match(rounding_tol)
        report = HarnessReport()

        equivalent = lfr_formally_equivalent(M, M_alt, tol, word_budget)
        report.add("M ~ M_alt (formal equivalence)", equivalent)

        outcome = search_lfr_isomorphism(M, M_alt, tol, draws, seed)
        report.add("M, M_alt not isomorphic", not outcome.found, detail=outcome.status.value)

        r_rank = numerical_rank(alpv_reach_matrix(sigma, 1), tol)
        o_rank = numerical_rank(alpv_obs_matrix(sigma, 1), tol)
        report.add(
            "sigma minimal",
            is_minimal_alpv(sigma, tol) == AlpvMinimality.MINIMAL,
            detail=f"rank R_1 = {r_rank}, rank O_1 = {o_rank}",
        )

        mr = lpv_to_lfr_mr(sigma, tol)
        report.add(
            "MR(sigma) blocks {2, 2}",
            mr.block_sizes == (2, 2),
            detail=f"blocks {list(mr.block_sizes)}",
        )
        report.add("MR(sigma) minimal", is_minimal_lfr(mr, tol) == LfrMinimality.MINIMAL)
        report.add(
            "MR(sigma) ~ M and M_alt",
            lfr_formally_equivalent(mr, M, tol, word_budget)
            and lfr_formally_equivalent(mr, M_alt, tol, word_budget),
        )
        report.add(
            "MR(sigma) ~ M_hat (rounded)",
            lfr_formally_equivalent(mr, M_hat, rounded, word_budget),
            detail=f"match tolerance {rounding_tol:g}",
        )

        hat = search_lfr_isomorphism(mr, M_hat, rounded, draws, seed)
        report.add(
            "MR(sigma) isomorphic to M_hat (rounded)",
            hat.found,
            detail=f"{hat.status.value}, residual {hat.residual:.3e}",
        )

        reduced = minimize_lfr(M, tol)
        report.add(
            "M_hat smaller than M and M_alt",
            M.n > M_hat.n and M_alt.n > M_hat.n and reduced.n == M_hat.n,
            detail=f"dim M = {M.n}, dim M_alt = {M_alt.n}, dim M_hat = {M_hat.n}, "
            f"dim min(M) = {reduced.n}",
        )

        span.set_attribute(SpanAttributes.VERDICT, report.all_hold)
        return report
