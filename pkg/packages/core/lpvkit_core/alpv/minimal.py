"""Minimality test and minimization for ALPV models."""

from enum import StrEnum

from lpvkit_core.alpv.reachability import observable_basis, reachable_basis
from lpvkit_core.models import AlpvModel, ReductionReport
from lpvkit_core.numerics import DEFAULT_TOLERANCE, Matrix, RankTolerance
from lpvkit_core.tracing import SpanAttributes, get_tracer

_tracer = get_tracer("lpvkit.alpv")


class AlpvMinimality(StrEnum):
    MINIMAL = "minimal"
    NOT_SPAN_REACHABLE = "not_span_reachable"
    NOT_OBSERVABLE = "not_observable"
    NEITHER = "neither"

    @classmethod
    def classify(cls, reachable: bool, observable: bool) -> "AlpvMinimality":
        if reachable and observable:
            return cls.MINIMAL
        if observable:
            return cls.NOT_SPAN_REACHABLE
        if reachable:
            return cls.NOT_OBSERVABLE
        return cls.NEITHER


def is_minimal_alpv(
    sigma: AlpvModel, tol: RankTolerance = DEFAULT_TOLERANCE
) -> AlpvMinimality:
    """Span-reachable iff rank R_{nx-1} = nx, observable iff rank O_{nx-1} = nx."""
    with _tracer.start_as_current_span("alpv.is_minimal") as span:
        reach = reachable_basis(sigma, tol)[0].shape[1]
        observe = observable_basis(sigma, tol)[0].shape[1]
        verdict = AlpvMinimality.classify(reach == sigma.n_x, observe == sigma.n_x)
        span.set_attribute(SpanAttributes.MODEL_DIM, sigma.n_x)
        span.set_attribute(SpanAttributes.RANK, [reach, observe])
        span.set_attribute(SpanAttributes.VERDICT, verdict.value)
        return verdict


def project_alpv(sigma: AlpvModel, V: Matrix) -> AlpvModel:
    """Restrict to the columns of an orthonormal V: ``(V^T A_i V, V^T B_i, C_i V, D_i)``."""
    return AlpvModel(
        tuple(V.T @ a @ V for a in sigma.A),
        tuple(V.T @ b for b in sigma.B),
        tuple(c @ V for c in sigma.C),
        sigma.D,
    )


def minimize_alpv(
    sigma: AlpvModel, tol: RankTolerance = DEFAULT_TOLERANCE
) -> tuple[AlpvModel, ReductionReport]:
    """Restrict to the reachable subspace, then quotient out the unobservable one.

    The result is minimal and has the same Markov parameters as sigma.
    """
    with _tracer.start_as_current_span("alpv.minimize") as span:
        V, reach_steps = reachable_basis(sigma, tol)
        restricted = project_alpv(sigma, V)
        W, observe_steps = observable_basis(restricted, tol)
        reduced = project_alpv(restricted, W)

        report = ReductionReport(
            kind="alpv",
            original=(sigma.n_x,),
            reachable=(restricted.n_x,),
            final=(reduced.n_x,),
            reach_steps=reach_steps,
            observe_steps=observe_steps,
        )
        span.set_attribute(SpanAttributes.DIM_BEFORE, sigma.n_x)
        span.set_attribute(SpanAttributes.DIM_AFTER, reduced.n_x)
        return reduced, report
