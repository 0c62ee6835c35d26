"""Minimality and per-channel minimization of LFRs."""

from collections.abc import Sequence
from enum import StrEnum

from scipy import linalg

from lpvkit_core.lfr.reachability import observable_bases, reachable_bases
from lpvkit_core.models import LfrModel, ReductionReport
from lpvkit_core.numerics import DEFAULT_TOLERANCE, Matrix, RankTolerance
from lpvkit_core.tracing import SpanAttributes, get_tracer

_tracer = get_tracer("lpvkit.lfr")


class LfrMinimality(StrEnum):
    MINIMAL = "minimal"
    NOT_REACHABLE = "not_reachable"
    NOT_OBSERVABLE = "not_observable"
    NEITHER = "neither"

    @classmethod
    def classify(cls, reachable: bool, observable: bool) -> "LfrMinimality":
        if reachable and observable:
            return cls.MINIMAL
        if observable:
            return cls.NOT_REACHABLE
        if reachable:
            return cls.NOT_OBSERVABLE
        return cls.NEITHER


def is_minimal_lfr(M: LfrModel, tol: RankTolerance = DEFAULT_TOLERANCE) -> LfrMinimality:
    """Reachable and observable in every channel at the stabilized step."""
    with _tracer.start_as_current_span("lfr.is_minimal") as span:
        reach, steps = reachable_bases(M, tol)
        observe, _ = observable_bases(M, tol)
        reach_ranks = [V.shape[1] for V in reach]
        observe_ranks = [W.shape[1] for W in observe]
        sizes = list(M.block_sizes)
        verdict = LfrMinimality.classify(reach_ranks == sizes, observe_ranks == sizes)
        span.set_attribute(SpanAttributes.MODEL_BLOCKS, sizes)
        span.set_attribute(SpanAttributes.RANK, reach_ranks + observe_ranks)
        span.set_attribute(SpanAttributes.RANK_STEPS, steps)
        span.set_attribute(SpanAttributes.VERDICT, verdict.value)
        return verdict


def project_lfr(M: LfrModel, bases: Sequence[Matrix]) -> LfrModel:
    """Restrict every channel to the columns of its orthonormal basis."""
    P = linalg.block_diag(*bases)
    return LfrModel(
        tuple(V.shape[1] for V in bases), P.T @ M.A @ P, P.T @ M.B, M.C @ P, M.D
    )


def reduce_lfr(
    M: LfrModel, tol: RankTolerance = DEFAULT_TOLERANCE
) -> tuple[LfrModel, ReductionReport]:
    """Per-channel restrict-then-quotient, with a report of the channel sizes at each stage."""
    with _tracer.start_as_current_span("lfr.minimize") as span:
        V, reach_steps = reachable_bases(M, tol)
        restricted = project_lfr(M, V)
        W, observe_steps = observable_bases(restricted, tol)
        reduced = project_lfr(restricted, W)

        report = ReductionReport(
            kind="lfr",
            original=M.block_sizes,
            reachable=restricted.block_sizes,
            final=reduced.block_sizes,
            reach_steps=reach_steps,
            observe_steps=observe_steps,
        )
        span.set_attribute(SpanAttributes.DIM_BEFORE, M.n)
        span.set_attribute(SpanAttributes.DIM_AFTER, reduced.n)
        return reduced, report


def minimize_lfr(M: LfrModel, tol: RankTolerance = DEFAULT_TOLERANCE) -> LfrModel:
    """Minimal LFR formally equivalent to M."""
    return reduce_lfr(M, tol)[0]
