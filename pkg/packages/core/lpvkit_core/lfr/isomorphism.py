"""Isomorphism search between LFRs with equal channel sizes."""

import numpy as np
from scipy import linalg

from lpvkit_core.errors import DimensionMismatchError
from lpvkit_core.lfr.minimal import LfrMinimality, is_minimal_lfr
from lpvkit_core.models import (
    CanonicalPartition,
    IsomorphismOutcome,
    IsomorphismStatus,
    LfrIsomorphism,
    LfrModel,
    canonical_partition,
    lfr_isomorphism_residual,
)
from lpvkit_core.numerics import (
    DEFAULT_TOLERANCE,
    Matrix,
    RankTolerance,
    affine_nullspace,
    channel_spans,
    close_enough,
    compress_columns,
    draw_members,
    is_invertible,
    left_multiplier,
    max_abs,
    right_multiplier,
    unvec,
    vec,
)
from lpvkit_core.tracing import SpanAttributes, get_tracer

_tracer = get_tracer("lpvkit.lfr")

LfrOutcome = IsomorphismOutcome[LfrIsomorphism]


def search_lfr_isomorphism(
    M1: LfrModel,
    M2: LfrModel,
    tol: RankTolerance = DEFAULT_TOLERANCE,
    draws: int = 32,
    seed: int = 0,
) -> LfrOutcome:
    """Look for ``T = diag(T_1..T_d)`` with ``T A1 T^-1 = A2``, ``T B1 = B2``, ``C1 T^-1 = C2``, ``D1 = D2``.

    Raises:
        DimensionMismatchError: If (p, m, d) differ.
    """
    if M1.signature != M2.signature:
        raise DimensionMismatchError(M1.signature, M2.signature, "(p, m, d)")
    if M1.block_sizes != M2.block_sizes:
        return LfrOutcome(
            IsomorphismStatus.DIMENSION_MISMATCH,
            detail=f"block sizes differ: {list(M1.block_sizes)} vs {list(M2.block_sizes)}",
        )

    with _tracer.start_as_current_span("lfr.find_isomorphism") as span:
        span.set_attribute(SpanAttributes.MODEL_BLOCKS, list(M1.block_sizes))
        if not close_enough(M1.D, M2.D, tol):
            outcome = LfrOutcome(IsomorphismStatus.INFEASIBLE, detail="D differ")
        elif (
            is_minimal_lfr(M1, tol) == LfrMinimality.MINIMAL
            and is_minimal_lfr(M2, tol) == LfrMinimality.MINIMAL
        ):
            outcome = _from_reachability(M1, M2, tol)
        else:
            outcome = _from_affine_system(M1, M2, tol, draws, seed)

        span.set_attribute(SpanAttributes.METHOD, outcome.method)
        span.set_attribute(SpanAttributes.VERDICT, outcome.status.value)
        span.set_attribute(SpanAttributes.RESIDUAL, outcome.residual)
        span.set_attribute(SpanAttributes.DRAWS, outcome.draws)
        return outcome


def find_lfr_isomorphism(
    M1: LfrModel,
    M2: LfrModel,
    tol: RankTolerance = DEFAULT_TOLERANCE,
    draws: int = 32,
    seed: int = 0,
) -> LfrIsomorphism | None:
    """Verified isomorphism from M1 to M2, or None."""
    return search_lfr_isomorphism(M1, M2, tol, draws, seed).isomorphism


def _scale(M1: LfrModel, M2: LfrModel) -> float:
    return max([1.0, *(max_abs(X) for X in (M1.A, M1.B, M1.C, M2.A, M2.B, M2.C))])


def _joint_partition(P1: CanonicalPartition, P2: CanonicalPartition) -> CanonicalPartition:
    d = P1.d
    return CanonicalPartition(
        H=tuple(np.hstack([h1, h2]) for h1, h2 in zip(P1.H, P2.H, strict=True)),
        F=tuple(
            tuple(linalg.block_diag(P1.F[i][j], P2.F[i][j]) for j in range(d)) for i in range(d)
        ),
        G=tuple(np.vstack([g1, g2]) for g1, g2 in zip(P1.G, P2.G, strict=True)),
    )


def _from_reachability(M1: LfrModel, M2: LfrModel, tol: RankTolerance) -> LfrOutcome:
    joint = _joint_partition(canonical_partition(M1), canonical_partition(M2))
    spans, _ = channel_spans(joint.G, joint.F, tol, basis=compress_columns)

    blocks: list[Matrix] = []
    for n, J in zip(M1.block_sizes, spans, strict=True):
        blocks.append(np.zeros((0, 0)) if n == 0 else J[n:] @ linalg.pinv(J[:n]))

    residual = lfr_isomorphism_residual(M1, M2, blocks)
    if residual <= tol.match_tol * _scale(M1, M2) and all(is_invertible(T, tol) for T in blocks):
        return LfrOutcome(
            IsomorphismStatus.FOUND, LfrIsomorphism(tuple(blocks), tol), "reachability", residual
        )
    return LfrOutcome(
        IsomorphismStatus.NOT_EQUIVALENT,
        method="reachability",
        residual=residual,
        detail="transformation read off reachability data does not verify",
    )


def _from_affine_system(
    M1: LfrModel, M2: LfrModel, tol: RankTolerance, draws: int, seed: int
) -> LfrOutcome:
    P1, P2 = canonical_partition(M1), canonical_partition(M2)
    sizes = M1.block_sizes
    d = M1.d
    offsets = np.concatenate(([0], np.cumsum([n * n for n in sizes]))).astype(int)
    unknowns = int(offsets[-1])

    def place(i: int, block: Matrix) -> Matrix:
        row = np.zeros((block.shape[0], unknowns))
        row[:, offsets[i] : offsets[i + 1]] = block
        return row

    rows: list[Matrix] = []
    rhs: list[Matrix] = []
    for i in range(d):
        ni = sizes[i]
        # T_i F1_{i,j} = F2_{i,j} T_j
        for j in range(d):
            if ni * sizes[j] == 0:
                continue
            rows.append(
                place(i, right_multiplier(P1.F[i][j], ni))
                - place(j, left_multiplier(P2.F[i][j], sizes[j]))
            )
            rhs.append(np.zeros(ni * sizes[j]))
        if ni == 0:
            continue
        # T_i G1_i = G2_i
        rows.append(place(i, right_multiplier(P1.G[i], ni)))
        rhs.append(vec(P2.G[i]))
        # H1_i = H2_i T_i
        rows.append(place(i, left_multiplier(P2.H[i], ni)))
        rhs.append(vec(P1.H[i]))

    K = np.vstack(rows) if rows else np.zeros((0, unknowns))
    b = np.concatenate(rhs) if rhs else np.zeros(0)
    solution = affine_nullspace(K, b, tol)
    if not solution.feasible:
        return LfrOutcome(
            IsomorphismStatus.INFEASIBLE,
            method="affine",
            residual=solution.residual,
            detail="linear isomorphism equations have no solution",
        )

    used = 0
    for used, x in enumerate(draw_members(solution, draws, seed)):
        blocks = [unvec(x[offsets[i] : offsets[i + 1]], n, n) for i, n in enumerate(sizes)]
        if all(is_invertible(T, tol) for T in blocks):
            return LfrOutcome(
                IsomorphismStatus.FOUND,
                LfrIsomorphism(tuple(blocks), tol),
                "affine",
                lfr_isomorphism_residual(M1, M2, blocks),
                solution.dimension,
                used,
            )
    return LfrOutcome(
        IsomorphismStatus.INCONCLUSIVE,
        method="affine",
        residual=solution.residual,
        solution_dim=solution.dimension,
        draws=used,
        detail=f"no invertible solution found in {draws} draws",
    )
