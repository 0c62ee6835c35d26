"""Affine LPV state-space models.

``x(k+1) = A(p(k)) x(k) + B(p(k)) u(k)``, ``y(k) = C(p(k)) x(k) + D(p(k)) u(k)``
with ``A(p) = A_0 + sum_i p_i A_i`` and likewise for B, C and D.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from lpvkit_core.errors import DimensionMismatchError, StructuralError
from lpvkit_core.models._arrays import expect_shape, frozen_matrix
from lpvkit_core.numerics import Matrix, max_abs


@dataclass(frozen=True, eq=False)
class AlpvModel:
    """Matrix families ``{A_i, B_i, C_i, D_i}`` for ``i = 0..n_p``.

    Index 0 is the constant term, index i >= 1 multiplies scheduling
    coordinate p_i. Dimensions are read off the matrix shapes; a zero state
    dimension is allowed.
    """

    A: tuple[Matrix, ...]
    B: tuple[Matrix, ...]
    C: tuple[Matrix, ...]
    D: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        for name in ("A", "B", "C", "D"):
            family = tuple(
                frozen_matrix(m, f"{name}[{i}]") for i, m in enumerate(getattr(self, name))
            )
            object.__setattr__(self, name, family)

        counts = {len(self.A), len(self.B), len(self.C), len(self.D)}
        if len(counts) != 1 or 0 in counts:
            raise StructuralError(
                "A, B, C, D must each hold n_p + 1 >= 1 matrices, got "
                f"{len(self.A)}, {len(self.B)}, {len(self.C)}, {len(self.D)}"
            )

        nx, nu, ny = self.A[0].shape[0], self.B[0].shape[1], self.C[0].shape[0]
        if nu < 1 or ny < 1:
            raise StructuralError(f"input and output dimensions must be >= 1, got {nu}, {ny}")
        for i in range(len(self.A)):
            expect_shape(self.A[i], (nx, nx), f"A[{i}]")
            expect_shape(self.B[i], (nx, nu), f"B[{i}]")
            expect_shape(self.C[i], (ny, nx), f"C[{i}]")
            expect_shape(self.D[i], (ny, nu), f"D[{i}]")

    @classmethod
    def from_matrices(
        cls,
        A: Sequence[Any],
        B: Sequence[Any],
        C: Sequence[Any],
        D: Sequence[Any] | None = None,
    ) -> "AlpvModel":
        """Build a model from nested lists; D defaults to zeros."""
        if D is None:
            ny = np.asarray(C[0], dtype=float).shape[0]
            nu = np.asarray(B[0], dtype=float).shape[1]
            D = [np.zeros((ny, nu)) for _ in A]
        return cls(tuple(A), tuple(B), tuple(C), tuple(D))

    @property
    def n_p(self) -> int:
        return len(self.A) - 1

    @property
    def n_x(self) -> int:
        return self.A[0].shape[0]

    @property
    def n_u(self) -> int:
        return self.B[0].shape[1]

    @property
    def n_y(self) -> int:
        return self.C[0].shape[0]

    @property
    def signature(self) -> tuple[int, int, int]:
        """``(n_p, n_u, n_y)``, the dimensions two comparable models must share."""
        return (self.n_p, self.n_u, self.n_y)

    def coefficient_block(self, i: int) -> Matrix:
        """Stacked ``[A_i B_i; C_i D_i]``."""
        return np.block([[self.A[i], self.B[i]], [self.C[i], self.D[i]]])

    def transpose(self) -> "AlpvModel":
        """Dual model ``(A_i^T, C_i^T, B_i^T, D_i^T)``; swaps reachability and observability."""
        return AlpvModel(
            tuple(a.T for a in self.A),
            tuple(c.T for c in self.C),
            tuple(b.T for b in self.B),
            tuple(d.T for d in self.D),
        )

    def lti(self, i: int = 0) -> "AlpvModel":
        """The time-invariant model ``(A_i, B_i, C_i, D_i)``."""
        return AlpvModel((self.A[i],), (self.B[i],), (self.C[i],), (self.D[i],))

    def max_deviation(self, other: "AlpvModel") -> float:
        """Largest entry-wise difference over all matrix families."""
        if (self.signature, self.n_x) != (other.signature, other.n_x):
            raise DimensionMismatchError(
                (*self.signature, self.n_x), (*other.signature, other.n_x), "ALPV dimensions"
            )
        pairs = zip(
            (*self.A, *self.B, *self.C, *self.D),
            (*other.A, *other.B, *other.C, *other.D),
            strict=True,
        )
        return max(max_abs(a - b) for a, b in pairs)

    def __repr__(self) -> str:
        return f"AlpvModel(n_p={self.n_p}, n_x={self.n_x}, n_u={self.n_u}, n_y={self.n_y})"
