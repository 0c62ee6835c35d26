"""LPV-LFR feedback loop under the scheduling-induced uncertainty block.

``Δ(p)(t) = diag(λ I_{n_1}, p_1(t) I_{n_2}, ..., p_{d-1}(t) I_{n_d})`` where
λ is the unit delay. With ``F_{i,j} = 0`` for ``i, j > 1`` the memoryless
channels only see the delayed state channel and the input, so each step
resolves explicitly.
"""

import numpy as np

from lpvkit_core.errors import NotLpvLfrError
from lpvkit_core.lfr.structure import lpv_structure_report
from lpvkit_core.models import (
    InputSignal,
    LfrModel,
    ScheduleSignal,
    Trajectory,
    canonical_partition,
    check_signals,
)
from lpvkit_core.numerics import DEFAULT_TOLERANCE, RankTolerance


def require_lpv_lfr(M: LfrModel, tol: RankTolerance = DEFAULT_TOLERANCE) -> None:
    """Raise NotLpvLfrError unless M has a single channel or the LPV-LFR structure."""
    if M.d > 1:
        report = lpv_structure_report(M, tol)
        if not report.is_lpv_lfr:
            raise NotLpvLfrError(report.worst_block)


def simulate_lpv_lfr(
    M: LfrModel,
    u: InputSignal,
    p: ScheduleSignal,
    tol: RankTolerance = DEFAULT_TOLERANCE,
) -> Trajectory:
    """Run the loop forward from a zero delay state.

    The returned states are the delay-channel signal ``w_1(t)``.

    Raises:
        NotLpvLfrError: If the loop is not an LPV-LFR.
    """
    require_lpv_lfr(M, tol)
    check_signals(u, p, M.m, M.d - 1)
    part = canonical_partition(M)
    K = u.horizon
    x = np.zeros((K + 1, M.block_sizes[0]))
    y = np.zeros((K, M.p))

    for t in range(K):
        ut = u.values[t]
        w1 = x[t]
        z1 = part.F[0][0] @ w1 + part.G[0] @ ut
        yt = part.H[0] @ w1 + M.D @ ut
        for c in range(1, M.d):
            zc = part.F[c][0] @ w1 + part.G[c] @ ut
            wc = p.values[t, c - 1] * zc
            z1 = z1 + part.F[0][c] @ wc
            yt = yt + part.H[c] @ wc
        x[t + 1] = z1
        y[t] = yt
    return Trajectory(x, y)
