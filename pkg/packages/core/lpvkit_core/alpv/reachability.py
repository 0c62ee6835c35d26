"""Extended reachability and observability of ALPV models."""

import numpy as np

from lpvkit_core.models import AlpvModel
from lpvkit_core.numerics import DEFAULT_TOLERANCE, Matrix, RankTolerance, invariant_span


def alpv_reach_matrix(sigma: AlpvModel, n: int) -> Matrix:
    """n-step extended reachability matrix.

    ``R_0 = [B_0, ..., B_np]``, ``R_{k+1} = [R_0, A_0 R_k, ..., A_np R_k]``.
    Column count grows geometrically; analysis code uses reachable_basis.
    """
    if n < 0:
        raise ValueError(f"step count must be >= 0, got {n}")
    R0 = np.hstack(sigma.B)
    R = R0
    for _ in range(n):
        R = np.hstack([R0, *(a @ R for a in sigma.A)])
    return R


def alpv_obs_matrix(sigma: AlpvModel, n: int) -> Matrix:
    """n-step extended observability matrix, the transpose of the dual's reachability matrix."""
    return alpv_reach_matrix(sigma.transpose(), n).T


def reachable_basis(
    sigma: AlpvModel, tol: RankTolerance = DEFAULT_TOLERANCE
) -> tuple[Matrix, int]:
    """Orthonormal basis of the column space of R_{nx-1} and the steps it took to stabilize."""
    return invariant_span(sigma.B, sigma.A, tol)


def observable_basis(
    sigma: AlpvModel, tol: RankTolerance = DEFAULT_TOLERANCE
) -> tuple[Matrix, int]:
    """Orthonormal basis of the row space of O_{nx-1}, as columns."""
    return reachable_basis(sigma.transpose(), tol)


def reachable_rank(sigma: AlpvModel, tol: RankTolerance = DEFAULT_TOLERANCE) -> int:
    return reachable_basis(sigma, tol)[0].shape[1]


def observable_rank(sigma: AlpvModel, tol: RankTolerance = DEFAULT_TOLERANCE) -> int:
    return observable_basis(sigma, tol)[0].shape[1]
