"""k-step reachability and observability of LFRs, per channel."""

import numpy as np

from lpvkit_core.models import CanonicalPartition, LfrModel, canonical_partition
from lpvkit_core.numerics import DEFAULT_TOLERANCE, Matrix, RankTolerance, channel_spans


def _reach(part: CanonicalPartition, k: int) -> list[Matrix]:
    if k < 0:
        raise ValueError(f"step count must be >= 0, got {k}")
    d = part.d
    R0 = list(part.G)
    R = R0
    for _ in range(k):
        R = [np.hstack([R0[i], *(part.F[i][j] @ R[j] for j in range(d))]) for i in range(d)]
    return R


def lfr_reach_matrices(M: LfrModel, k: int) -> list[Matrix]:
    """``R^i_0 = G_i``, ``R^i_{k+1} = [R^i_0, F_{i,1} R^1_k, ..., F_{i,d} R^d_k]``."""
    return _reach(canonical_partition(M), k)


def lfr_obs_matrices(M: LfrModel, k: int) -> list[Matrix]:
    """``O^i_0 = H_i``, ``O^i_{k+1} = [O^i_0; O^1_k F_{1,i}; ...; O^d_k F_{d,i}]``."""
    return [R.T for R in _reach(canonical_partition(M).transpose(), k)]


def reachable_bases(
    M: LfrModel, tol: RankTolerance = DEFAULT_TOLERANCE
) -> tuple[list[Matrix], int]:
    """Orthonormal basis of every channel's reachable space and the steps taken to stabilize."""
    part = canonical_partition(M)
    return channel_spans(part.G, part.F, tol)


def observable_bases(
    M: LfrModel, tol: RankTolerance = DEFAULT_TOLERANCE
) -> tuple[list[Matrix], int]:
    """Orthonormal basis of every channel's observable row space, as columns."""
    return reachable_bases(M.transpose(), tol)


def reachable_ranks(M: LfrModel, tol: RankTolerance = DEFAULT_TOLERANCE) -> tuple[int, ...]:
    return tuple(V.shape[1] for V in reachable_bases(M, tol)[0])


def observable_ranks(M: LfrModel, tol: RankTolerance = DEFAULT_TOLERANCE) -> tuple[int, ...]:
    return tuple(V.shape[1] for V in observable_bases(M, tol)[0])
