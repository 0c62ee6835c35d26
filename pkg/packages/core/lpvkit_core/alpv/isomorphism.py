"""Isomorphism search between ALPV models."""

import numpy as np
from scipy import linalg

from lpvkit_core.alpv.minimal import AlpvMinimality, is_minimal_alpv
from lpvkit_core.errors import DimensionMismatchError
from lpvkit_core.models import (
    AlpvIsomorphism,
    AlpvModel,
    IsomorphismOutcome,
    IsomorphismStatus,
    alpv_isomorphism_residual,
)
from lpvkit_core.numerics import (
    DEFAULT_TOLERANCE,
    Matrix,
    RankTolerance,
    affine_nullspace,
    close_enough,
    compress_columns,
    draw_members,
    invariant_span,
    is_invertible,
    left_multiplier,
    max_abs,
    right_multiplier,
    unvec,
    vec,
)
from lpvkit_core.tracing import SpanAttributes, get_tracer

_tracer = get_tracer("lpvkit.alpv")

AlpvOutcome = IsomorphismOutcome[AlpvIsomorphism]


def search_alpv_isomorphism(
    s1: AlpvModel,
    s2: AlpvModel,
    tol: RankTolerance = DEFAULT_TOLERANCE,
    draws: int = 32,
    seed: int = 0,
) -> AlpvOutcome:
    """Look for T with ``T A_i = A_i' T``, ``T B_i = B_i'``, ``C_i = C_i' T``, ``D_i = D_i'``.

    Minimal models: T is read off the jointly compressed reachability data
    of both models and verified. Otherwise the linear system in the entries
    of T is solved and its solution space sampled for an invertible member.

    Raises:
        DimensionMismatchError: If (n_p, n_u, n_y) differ.
    """
    if s1.signature != s2.signature:
        raise DimensionMismatchError(s1.signature, s2.signature, "(n_p, n_u, n_y)")
    if s1.n_x != s2.n_x:
        return AlpvOutcome(
            IsomorphismStatus.DIMENSION_MISMATCH,
            detail=f"state dimensions differ: {s1.n_x} vs {s2.n_x}",
        )

    with _tracer.start_as_current_span("alpv.find_isomorphism") as span:
        if not all(close_enough(d1, d2, tol) for d1, d2 in zip(s1.D, s2.D, strict=True)):
            outcome = AlpvOutcome(IsomorphismStatus.INFEASIBLE, detail="D_i differ")
        elif s1.n_x == 0:
            outcome = AlpvOutcome(
                IsomorphismStatus.FOUND, AlpvIsomorphism.identity(0), "trivial", 0.0
            )
        elif (
            is_minimal_alpv(s1, tol) == AlpvMinimality.MINIMAL
            and is_minimal_alpv(s2, tol) == AlpvMinimality.MINIMAL
        ):
            outcome = _from_reachability(s1, s2, tol)
        else:
            outcome = _from_affine_system(s1, s2, tol, draws, seed)

        span.set_attribute(SpanAttributes.METHOD, outcome.method)
        span.set_attribute(SpanAttributes.VERDICT, outcome.status.value)
        span.set_attribute(SpanAttributes.RESIDUAL, outcome.residual)
        return outcome


def find_alpv_isomorphism(
    s1: AlpvModel,
    s2: AlpvModel,
    tol: RankTolerance = DEFAULT_TOLERANCE,
    draws: int = 32,
    seed: int = 0,
) -> AlpvIsomorphism | None:
    """Verified isomorphism from s1 to s2, or None."""
    return search_alpv_isomorphism(s1, s2, tol, draws, seed).isomorphism


def _scale(s1: AlpvModel, s2: AlpvModel) -> float:
    families = (*s1.A, *s1.B, *s1.C, *s2.A, *s2.B, *s2.C)
    return max([1.0, *(max_abs(m) for m in families)])


def _from_reachability(s1: AlpvModel, s2: AlpvModel, tol: RankTolerance) -> AlpvOutcome:
    n = s1.n_x
    joint_A = [linalg.block_diag(a1, a2) for a1, a2 in zip(s1.A, s2.A, strict=True)]
    joint_B = [np.vstack([b1, b2]) for b1, b2 in zip(s1.B, s2.B, strict=True)]
    J, _ = invariant_span(joint_B, joint_A, tol, basis=compress_columns)
    T = J[n:] @ linalg.pinv(J[:n])

    residual = alpv_isomorphism_residual(s1, s2, T)
    if residual <= tol.match_tol * _scale(s1, s2) and is_invertible(T, tol):
        return AlpvOutcome(
            IsomorphismStatus.FOUND, AlpvIsomorphism(T, tol), "reachability", residual
        )
    return AlpvOutcome(
        IsomorphismStatus.NOT_EQUIVALENT,
        method="reachability",
        residual=residual,
        detail="transformation read off reachability data does not verify",
    )


def _from_affine_system(
    s1: AlpvModel, s2: AlpvModel, tol: RankTolerance, draws: int, seed: int
) -> AlpvOutcome:
    n = s1.n_x
    blocks: list[Matrix] = []
    rhs: list[Matrix] = []
    for i in range(s1.n_p + 1):
        blocks.append(right_multiplier(s1.A[i], n) - left_multiplier(s2.A[i], n))
        rhs.append(np.zeros(n * n))
        blocks.append(right_multiplier(s1.B[i], n))
        rhs.append(vec(s2.B[i]))
        blocks.append(left_multiplier(s2.C[i], n))
        rhs.append(vec(s1.C[i]))

    solution = affine_nullspace(np.vstack(blocks), np.concatenate(rhs), tol)
    if not solution.feasible:
        return AlpvOutcome(
            IsomorphismStatus.INFEASIBLE,
            method="affine",
            residual=solution.residual,
            detail="linear isomorphism equations have no solution",
        )

    used = 0
    for used, x in enumerate(draw_members(solution, draws, seed)):
        T = unvec(x, n, n)
        if is_invertible(T, tol):
            residual = alpv_isomorphism_residual(s1, s2, T)
            return AlpvOutcome(
                IsomorphismStatus.FOUND,
                AlpvIsomorphism(T, tol),
                "affine",
                residual,
                solution.dimension,
                used,
            )
    return AlpvOutcome(
        IsomorphismStatus.INCONCLUSIVE,
        method="affine",
        residual=solution.residual,
        solution_dim=solution.dimension,
        draws=used,
        detail=f"no invertible solution found in {draws} draws",
    )
