"""State-space isomorphisms and their action on models."""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np
from scipy import linalg

from lpvkit_core.errors import DimensionMismatchError, StructuralError
from lpvkit_core.models._arrays import frozen_matrix
from lpvkit_core.models.alpv import AlpvModel
from lpvkit_core.models.lfr import LfrModel
from lpvkit_core.numerics import DEFAULT_TOLERANCE, Matrix, RankTolerance, is_invertible


def _inverse(T: Matrix) -> Matrix:
    return np.zeros_like(T) if T.size == 0 else linalg.inv(T)


@dataclass(frozen=True, eq=False)
class LfrIsomorphism:
    """Block-diagonal ``T = diag(T_1, ..., T_d)`` with every T_i invertible."""

    blocks: tuple[Matrix, ...]
    tol: RankTolerance = DEFAULT_TOLERANCE

    def __post_init__(self) -> None:
        blocks = tuple(frozen_matrix(t, f"T[{i + 1}]") for i, t in enumerate(self.blocks))
        for i, t in enumerate(blocks):
            if not is_invertible(t, self.tol):
                raise StructuralError(f"T[{i + 1}] is not square and invertible")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def identity(cls, block_sizes: Sequence[int]) -> "LfrIsomorphism":
        return cls(tuple(np.eye(n) for n in block_sizes))

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(t.shape[0] for t in self.blocks)

    @property
    def matrix(self) -> Matrix:
        """The full block-diagonal matrix."""
        return linalg.block_diag(*self.blocks)

    def inverse(self) -> "LfrIsomorphism":
        return LfrIsomorphism(tuple(_inverse(t) for t in self.blocks), self.tol)

    def compose(self, inner: "LfrIsomorphism") -> "LfrIsomorphism":
        """Blockwise product ``self_i @ inner_i``: apply inner first, then self."""
        if self.block_sizes != inner.block_sizes:
            raise DimensionMismatchError(self.block_sizes, inner.block_sizes, "block sizes")
        return LfrIsomorphism(
            tuple(s @ t for s, t in zip(self.blocks, inner.blocks, strict=True)), self.tol
        )


@dataclass(frozen=True, eq=False)
class AlpvIsomorphism:
    """Invertible state transformation ``T`` (n_x x n_x)."""

    T: Matrix
    tol: RankTolerance = DEFAULT_TOLERANCE

    def __post_init__(self) -> None:
        T = frozen_matrix(self.T, "T")
        if not is_invertible(T, self.tol):
            raise StructuralError("T is not square and invertible")
        object.__setattr__(self, "T", T)

    @classmethod
    def identity(cls, n: int) -> "AlpvIsomorphism":
        return cls(np.eye(n))

    def inverse(self) -> "AlpvIsomorphism":
        return AlpvIsomorphism(_inverse(self.T), self.tol)


def apply_lfr_isomorphism(M: LfrModel, T: LfrIsomorphism) -> LfrModel:
    """``(T A T^-1, T B, C T^-1, D)``."""
    if T.block_sizes != M.block_sizes:
        raise DimensionMismatchError(M.block_sizes, T.block_sizes, "block sizes")
    Tm = T.matrix
    Ti = T.inverse().matrix
    return LfrModel(M.block_sizes, Tm @ M.A @ Ti, Tm @ M.B, M.C @ Ti, M.D)


def apply_alpv_isomorphism(sigma: AlpvModel, T: AlpvIsomorphism) -> AlpvModel:
    """``A_i' = T A_i T^-1``, ``B_i' = T B_i``, ``C_i' = C_i T^-1``, ``D_i' = D_i``."""
    if T.T.shape[0] != sigma.n_x:
        raise DimensionMismatchError(sigma.n_x, T.T.shape[0], "state dimension")
    Ti = _inverse(T.T)
    return AlpvModel(
        tuple(T.T @ a @ Ti for a in sigma.A),
        tuple(T.T @ b for b in sigma.B),
        tuple(c @ Ti for c in sigma.C),
        sigma.D,
    )


def lfr_isomorphism_residual(M1: LfrModel, M2: LfrModel, blocks: Sequence[Any]) -> float:
    """Largest residual of ``T A1 = A2 T``, ``T B1 = B2``, ``C1 = C2 T``, ``D1 = D2``."""
    T = linalg.block_diag(*[np.asarray(b, dtype=float) for b in blocks])
    return float(
        max(
            _norm(T @ M1.A - M2.A @ T),
            _norm(T @ M1.B - M2.B),
            _norm(M1.C - M2.C @ T),
            _norm(M1.D - M2.D),
        )
    )


def alpv_isomorphism_residual(s1: AlpvModel, s2: AlpvModel, T: Any) -> float:
    """Largest residual of ``T A_i = A_i' T``, ``T B_i = B_i'``, ``C_i = C_i' T``, ``D_i = D_i'``."""
    T = np.asarray(T, dtype=float)
    worst = 0.0
    for i in range(s1.n_p + 1):
        worst = max(
            worst,
            _norm(T @ s1.A[i] - s2.A[i] @ T),
            _norm(T @ s1.B[i] - s2.B[i]),
            _norm(s1.C[i] - s2.C[i] @ T),
            _norm(s1.D[i] - s2.D[i]),
        )
    return worst


def _norm(X: Matrix) -> float:
    return float(np.max(np.abs(X))) if X.size else 0.0
