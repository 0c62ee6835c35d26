"""Truncated star-product series of an LPV-LFR.

``y = D u + sum_{w != ε} Y_M(w) δ_w u`` with δ_1 the unit delay and δ_c
(c > 1) multiplication by ``p_{c-1}(t)``. Words of length l are summed at
once by the signal recursion ``X^1_c = δ_c(G_c u)``,
``X^{l+1}_c = δ_c(sum_j F_{c,j} X^l_j)``.
"""

import numpy as np

from lpvkit_core.models import (
    InputSignal,
    LfrModel,
    ScheduleSignal,
    canonical_partition,
    check_signals,
)
from lpvkit_core.numerics import DEFAULT_TOLERANCE, Matrix, RankTolerance
from lpvkit_core.simulation.loop import require_lpv_lfr


def exact_word_horizon(steps: int) -> int:
    """Word length after which outputs at times ``0..steps-1`` no longer change.

    A nonzero word contributing at time t has at most t delay letters and no
    two adjacent letters above 1, so its length is at most ``2t + 1``.
    """
    return 2 * steps + 1


def truncated_star_series(
    M: LfrModel,
    u: InputSignal,
    p: ScheduleSignal,
    word_horizon: int | None = None,
    tol: RankTolerance = DEFAULT_TOLERANCE,
) -> Matrix:
    """Outputs ``y(0..K-1)`` of the series summed over words of length <= word_horizon.

    ``word_horizon`` defaults to ``2K + 1``.

    Raises:
        NotLpvLfrError: If d > 1 and M is not an LPV-LFR.
    """
    require_lpv_lfr(M, tol)
    check_signals(u, p, M.m, M.d - 1)
    K = u.horizon
    L = exact_word_horizon(K) if word_horizon is None else word_horizon
    if L < 0:
        raise ValueError(f"word horizon must be >= 0, got {L}")

    part = canonical_partition(M)
    U, P = u.values, p.values

    def delta(c: int, X: Matrix) -> Matrix:
        if c > 0:
            return X * P[:, c - 1 : c]
        delayed = np.zeros_like(X)
        delayed[1:] = X[:-1]
        return delayed

    y = U @ M.D.T
    X = [delta(c, U @ part.G[c].T) for c in range(M.d)]
    for length in range(1, L + 1):
        for c in range(M.d):
            y = y + X[c] @ part.H[c].T
        if length < L:
            X = [
                delta(c, np.sum([X[j] @ part.F[c][j].T for j in range(M.d)], axis=0))
                for c in range(M.d)
            ]
    return y
