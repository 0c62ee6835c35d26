"""ALPV <-> LFR transformations.

An ALPV with ``n_p`` scheduling coordinates maps to an LFR with
``d = n_p + 1`` channels: channel 1 is the state (the delay channel),
channel ``i + 1`` realizes coordinate ``i`` through a factorization
``[A_i B_i; C_i D_i] = Left_i @ Right_i`` with
``Left_i = [F_{1,i+1}; H_{i+1}]`` and ``Right_i = [F_{i+1,1}, G_{i+1}]``.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from lpvkit_core.errors import FactorMismatchError, NotLpvLfrError, StructuralError
from lpvkit_core.lfr.structure import lpv_structure_report
from lpvkit_core.models import (
    AlpvModel,
    CanonicalPartition,
    LfrModel,
    assemble_lfr,
    canonical_partition,
)
from lpvkit_core.models._arrays import frozen_matrix
from lpvkit_core.numerics import (
    DEFAULT_TOLERANCE,
    Matrix,
    RankTolerance,
    full_rank_factorization,
    max_abs,
)
from lpvkit_core.tracing import SpanAttributes, get_tracer

_tracer = get_tracer("lpvkit.transform")


@dataclass(frozen=True, eq=False)
class FactorPair:
    """``Left`` ((nx + ny) x r) and ``Right`` (r x (nx + nu)) with product ``[A_i B_i; C_i D_i]``."""

    left: Matrix
    right: Matrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "left", frozen_matrix(self.left, "left factor"))
        object.__setattr__(self, "right", frozen_matrix(self.right, "right factor"))
        if self.left.shape[1] != self.right.shape[0]:
            raise StructuralError(
                f"factor shapes {self.left.shape} and {self.right.shape} do not chain"
            )

    @property
    def rank(self) -> int:
        return self.left.shape[1]

    @classmethod
    def of(cls, left: Any, right: Any) -> "FactorPair":
        return cls(np.asarray(left, dtype=float), np.asarray(right, dtype=float))


def mr_factor_pairs(sigma: AlpvModel, tol: RankTolerance = DEFAULT_TOLERANCE) -> list[FactorPair]:
    """Full-rank factorization of every stacked ``[A_i B_i; C_i D_i]``, i = 1..n_p."""
    return [
        FactorPair(*full_rank_factorization(sigma.coefficient_block(i), tol))
        for i in range(1, sigma.n_p + 1)
    ]


def lpv_to_lfr(
    sigma: AlpvModel,
    factors: Sequence[FactorPair],
    tol: RankTolerance = DEFAULT_TOLERANCE,
) -> LfrModel:
    """LFR calculated from sigma with the given factor pairs.

    Raises:
        StructuralError: If the number or shapes of the pairs do not fit sigma.
        FactorMismatchError: If a pair does not reproduce its coefficient block.
    """
    if len(factors) != sigma.n_p:
        raise StructuralError(f"expected {sigma.n_p} factor pairs, got {len(factors)}")
    nx, nu, ny = sigma.n_x, sigma.n_u, sigma.n_y
    for i, pair in enumerate(factors, start=1):
        if pair.left.shape[0] != nx + ny or pair.right.shape[1] != nx + nu:
            raise StructuralError(
                f"factor pair {i} has shapes {pair.left.shape} x {pair.right.shape}, "
                f"expected ({nx + ny}, r) x (r, {nx + nu})"
            )
        block = sigma.coefficient_block(i)
        residual = max_abs(pair.left @ pair.right - block)
        if residual > tol.match_tol * max(1.0, max_abs(block)):
            raise FactorMismatchError(i, residual)

    sizes = [nx, *(pair.rank for pair in factors)]
    d = len(sizes)
    F = [[np.zeros((sizes[i], sizes[j])) for j in range(d)] for i in range(d)]
    H = [sigma.C[0]]
    G = [sigma.B[0]]
    F[0][0] = sigma.A[0]
    for c, pair in enumerate(factors, start=1):
        F[0][c] = pair.left[:nx]
        H.append(pair.left[nx:])
        F[c][0] = pair.right[:, :nx]
        G.append(pair.right[:, nx:])

    part = CanonicalPartition(H=tuple(H), F=tuple(tuple(row) for row in F), G=tuple(G))
    return assemble_lfr(part, sigma.D[0])


def lpv_to_lfr_mr(sigma: AlpvModel, tol: RankTolerance = DEFAULT_TOLERANCE) -> LfrModel:
    """LPV-LFR from sigma by full-rank (MR) factorization; channel i + 1 has size rank [A_i B_i; C_i D_i]."""
    with _tracer.start_as_current_span("transform.lpv_to_lfr_mr") as span:
        M = lpv_to_lfr(sigma, mr_factor_pairs(sigma, tol), tol)
        span.set_attribute(SpanAttributes.MODEL_BLOCKS, list(M.block_sizes))
        return M


def lfr_factor_pairs(M: LfrModel, tol: RankTolerance = DEFAULT_TOLERANCE) -> list[FactorPair]:
    """Factor pairs ``([F_{1,c}; H_c], [F_{c,1}, G_c])`` of an LPV-LFR, c = 2..d."""
    part = _lpv_partition(M, tol)
    return [
        FactorPair(
            np.vstack([part.F[0][c], part.H[c]]),
            np.hstack([part.F[c][0], part.G[c]]),
        )
        for c in range(1, M.d)
    ]


def lfr_to_alpv(M: LfrModel, tol: RankTolerance = DEFAULT_TOLERANCE) -> AlpvModel:
    """ALPV associated with an LPV-LFR.

    A single-channel LFR is accepted as the time-invariant model ``(A, B, C, D)``.

    Raises:
        NotLpvLfrError: If d > 1 and some F_{i,j} with i, j > 1 is nonzero.
    """
    with _tracer.start_as_current_span("transform.lfr_to_alpv") as span:
        part = _lpv_partition(M, tol)
        nx = M.block_sizes[0]
        A, B, C, D = [part.F[0][0]], [part.G[0]], [part.H[0]], [M.D]
        for pair in lfr_factor_pairs(M, tol):
            X = pair.left @ pair.right
            A.append(X[:nx, :nx])
            B.append(X[:nx, nx:])
            C.append(X[nx:, :nx])
            D.append(X[nx:, nx:])
        sigma = AlpvModel(tuple(A), tuple(B), tuple(C), tuple(D))
        span.set_attribute(SpanAttributes.MODEL_DIM, sigma.n_x)
        return sigma


def _lpv_partition(M: LfrModel, tol: RankTolerance) -> CanonicalPartition:
    if M.d > 1:
        report = lpv_structure_report(M, tol)
        if not report.is_lpv_lfr:
            raise NotLpvLfrError(report.worst_block)
    return canonical_partition(M)
