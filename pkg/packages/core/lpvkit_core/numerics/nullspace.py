"""Affine solution spaces of linear systems ``K x = b``."""

from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from lpvkit_core.numerics.rank import Matrix, ensure_finite, kernel_basis, max_abs
from lpvkit_core.numerics.tolerance import DEFAULT_TOLERANCE, RankTolerance


@dataclass(frozen=True)
class AffineSolution:
    """Solution set ``particular + span(basis)`` of a linear system.

    ``particular`` is None when the system is infeasible.
    """

    feasible: bool
    particular: Matrix | None
    basis: Matrix
    residual: float

    @property
    def dimension(self) -> int:
        """Dimension of the solution space (-1 when infeasible)."""
        return self.basis.shape[1] if self.feasible else -1

    def member(self, coefficients: Matrix) -> Matrix:
        """Solution at the given coordinates in the nullspace basis."""
        if self.particular is None:
            raise ValueError("infeasible system has no members")
        return self.particular + self.basis @ coefficients


def affine_nullspace(
    coefficients: Matrix,
    rhs: Matrix,
    tol: RankTolerance = DEFAULT_TOLERANCE,
    residual_tol: float = 1e-9,
) -> AffineSolution:
    """Solve ``coefficients @ x = rhs`` as an affine space.

    The particular solution is the minimum-norm least-squares solution; the
    system counts as feasible when its residual, scaled by the magnitude of
    the data, stays below ``residual_tol``.
    """
    K = np.asarray(coefficients, dtype=float)
    b = np.asarray(rhs, dtype=float).reshape(-1)
    ensure_finite(K, "constraint matrix")
    ensure_finite(b, "constraint right-hand side")
    unknowns = K.shape[1]

    basis = kernel_basis(K, tol)
    if unknowns == 0:
        residual = max_abs(b)
        if residual > residual_tol * max(1.0, residual):
            return AffineSolution(False, None, basis, residual)
        return AffineSolution(True, np.zeros(0), basis, residual)
    if K.shape[0] == 0:
        return AffineSolution(True, np.zeros(unknowns), basis, 0.0)

    x, *_ = linalg.lstsq(K, b)
    residual = max_abs(K @ x - b)
    scale = max(1.0, max_abs(b))
    if residual > residual_tol * scale:
        return AffineSolution(False, None, basis, residual)
    return AffineSolution(True, x, basis, residual)


def draw_members(solution: AffineSolution, draws: int, seed: int = 0) -> Iterator[Matrix]:
    """Yield the particular solution, then ``draws`` members at standard normal coordinates."""
    if solution.particular is None:
        return
    yield solution.particular
    dim = solution.basis.shape[1]
    if dim == 0:
        return
    rng = np.random.default_rng(seed)
    for _ in range(draws):
        yield solution.member(rng.standard_normal(dim))
