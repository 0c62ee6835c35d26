"""Formal equivalence of LFRs and equivalence to the LPV-LFR class."""

import numpy as np
from scipy import linalg

from lpvkit_core.errors import DimensionMismatchError
from lpvkit_core.lfr.minimal import minimize_lfr
from lpvkit_core.lfr.reachability import reachable_bases
from lpvkit_core.lfr.series import lfr_series_table
from lpvkit_core.lfr.structure import is_lpv_lfr
from lpvkit_core.models import LfrModel, canonical_partition, count_words, is_admissible
from lpvkit_core.numerics import (
    DEFAULT_TOLERANCE,
    Matrix,
    RankTolerance,
    channel_spans,
    close_enough,
    max_abs,
)
from lpvkit_core.tracing import SpanAttributes, get_tracer

_tracer = get_tracer("lpvkit.lfr")


def lfr_difference_model(M1: LfrModel, M2: LfrModel) -> LfrModel:
    """LFR whose formal series is ``Y_M1 - Y_M2``; channel i has size n_i(M1) + n_i(M2)."""
    _check_signature(M1, M2)
    P1, P2 = canonical_partition(M1), canonical_partition(M2)
    d = M1.d
    H = [np.hstack([P1.H[i], -P2.H[i]]) for i in range(d)]
    G = [np.vstack([P1.G[i], P2.G[i]]) for i in range(d)]
    F = [[linalg.block_diag(P1.F[i][j], P2.F[i][j]) for j in range(d)] for i in range(d)]
    sizes = tuple(a + b for a, b in zip(M1.block_sizes, M2.block_sizes, strict=True))
    n = sum(sizes)
    A = np.block(F) if n else np.zeros((0, 0))
    return LfrModel(sizes, A.reshape(n, n), np.vstack(G), np.hstack(H), M1.D - M2.D)


def lfr_equivalence_horizon(M1: LfrModel, M2: LfrModel) -> int:
    return M1.n + M2.n


def lfr_formally_equivalent(
    M1: LfrModel,
    M2: LfrModel,
    tol: RankTolerance = DEFAULT_TOLERANCE,
    word_budget: int = 4096,
) -> bool:
    """Whether the formal input-output maps of M1 and M2 coincide.

    Compares series tables up to ``dim M1 + dim M2`` when that table holds at
    most ``word_budget`` words; otherwise checks that the difference model's
    output blocks vanish on its reachable subspaces.
    """
    _check_signature(M1, M2)
    with _tracer.start_as_current_span("lfr.formally_equivalent") as span:
        horizon = lfr_equivalence_horizon(M1, M2)
        if count_words(M1.d, horizon) <= word_budget:
            method = "series_table"
            verdict = lfr_series_table(M1, horizon).matches(lfr_series_table(M2, horizon), tol)
        else:
            method = "reachable_subspace"
            diff = lfr_difference_model(M1, M2)
            verdict = close_enough(M1.D, M2.D, tol) and _output_vanishes(
                diff, reachable_bases(diff, tol)[0], tol
            )
        span.set_attribute(SpanAttributes.METHOD, method)
        span.set_attribute(SpanAttributes.HORIZON, horizon)
        span.set_attribute(SpanAttributes.VERDICT, verdict)
        return verdict


def forbidden_bases(M: LfrModel, tol: RankTolerance = DEFAULT_TOLERANCE) -> list[Matrix]:
    """Per-channel span of the state vectors of words with two adjacent letters above 1.

    Appending letter i to a word ending in j makes it forbidden when i, j > 1,
    so the spaces are the least solution of
    ``W_i = sum_j F_{i,j} W_j + sum_{j > 1, i > 1} F_{i,j} U_j``
    with U_j the reachable spaces.
    """
    part = canonical_partition(M)
    U, _ = reachable_bases(M, tol)
    d = M.d
    seeds = []
    for i in range(d):
        cols = [part.F[i][j] @ U[j] for j in range(1, d)] if i > 0 else []
        seeds.append(np.hstack(cols) if cols else np.zeros((M.block_sizes[i], 0)))
    W, _ = channel_spans(seeds, part.F, tol)
    return W


def equivalent_to_lpv_lfr(
    M: LfrModel,
    tol: RankTolerance = DEFAULT_TOLERANCE,
    word_budget: int = 4096,
) -> bool:
    """Whether M is formally equivalent to some LPV-LFR.

    Holds iff ``Y_M(w) = 0`` for every word w with two adjacent letters above 1.
    Words up to length ``2 dim(M) + 1`` are tabulated when the table fits in
    ``word_budget``; otherwise the output blocks are tested on the spans of
    the forbidden words' state vectors. LFRs with a single channel are never
    LPV-LFRs.

    In the table path each forbidden coefficient is compared with the same
    word's coefficient in the entry-wise absolute value of M, which bounds
    the rounding error of its products. ``match_tol`` is relative to that
    bound, not to the largest entry of the table.
    """
    if M.d == 1:
        return False
    with _tracer.start_as_current_span("lfr.equivalent_to_lpv_lfr") as span:
        horizon = 2 * M.n + 1
        if count_words(M.d, horizon) <= word_budget:
            method = "series_table"
            table = lfr_series_table(M, horizon)
            bound = lfr_series_table(_magnitude_model(M), horizon)
            verdict = all(
                max_abs(c) <= tol.match_tol * max_abs(bound.coefficients[w])
                for w, c in table.items()
                if not is_admissible(w)
            )
        else:
            method = "forbidden_subspace"
            verdict = _output_vanishes(M, forbidden_bases(M, tol), tol)
        span.set_attribute(SpanAttributes.METHOD, method)
        span.set_attribute(SpanAttributes.VERDICT, verdict)
        return verdict


def equivalent_to_lpv_lfr_by_minimization(
    M: LfrModel, tol: RankTolerance = DEFAULT_TOLERANCE
) -> bool:
    """Second decider: a minimal LFR equivalent to an LPV-LFR is itself one."""
    return is_lpv_lfr(minimize_lfr(M, tol), tol)


def _magnitude_model(M: LfrModel) -> LfrModel:
    return LfrModel(M.block_sizes, np.abs(M.A), np.abs(M.B), np.abs(M.C), np.abs(M.D))


def _output_vanishes(M: LfrModel, bases: list[Matrix], tol: RankTolerance) -> bool:
    part = canonical_partition(M)
    scale = max(1.0, max_abs(M.C))
    return all(max_abs(h @ V) <= tol.match_tol * scale for h, V in zip(part.H, bases, strict=True))


def _check_signature(M1: LfrModel, M2: LfrModel) -> None:
    if M1.signature != M2.signature:
        raise DimensionMismatchError(M1.signature, M2.signature, "(p, m, d)")
