"""Linear fractional representations and their canonical partitioning."""

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import accumulate
from typing import Any

import numpy as np

from lpvkit_core.errors import DimensionMismatchError, StructuralError
from lpvkit_core.models._arrays import expect_shape, frozen_matrix
from lpvkit_core.numerics import Matrix, max_abs


@dataclass(frozen=True, eq=False)
class LfrModel:
    """LFR ``(p, m, d, {n_i}, A, B, C, D)`` with ``n = sum(n_i)``.

    Channels are numbered 1..d in the math and 0..d-1 in Python sequences.
    Channels of size 0 are legal.
    """

    block_sizes: tuple[int, ...]
    A: Matrix
    B: Matrix
    C: Matrix
    D: Matrix

    def __post_init__(self) -> None:
        sizes = tuple(int(s) for s in self.block_sizes)
        if not sizes or any(s < 0 for s in sizes):
            raise StructuralError(f"block sizes must be a non-empty list of n_i >= 0, got {sizes}")
        object.__setattr__(self, "block_sizes", sizes)
        for name in ("A", "B", "C", "D"):
            object.__setattr__(self, name, frozen_matrix(getattr(self, name), name))

        n = sum(sizes)
        p, m = self.D.shape
        if p < 1 or m < 1:
            raise StructuralError(f"input and output dimensions must be >= 1, got m={m}, p={p}")
        expect_shape(self.A, (n, n), "A")
        expect_shape(self.B, (n, m), "B")
        expect_shape(self.C, (p, n), "C")

    @classmethod
    def from_matrices(
        cls, block_sizes: Sequence[int], A: Any, B: Any, C: Any, D: Any = None
    ) -> "LfrModel":
        """Build a model from nested lists; D defaults to zero."""
        n = sum(block_sizes)
        A_ = np.asarray(A, dtype=float)
        B_ = np.asarray(B, dtype=float)
        C_ = np.asarray(C, dtype=float)
        if A_.size == 0:
            A_ = np.zeros((n, n))
        if D is None:
            D = np.zeros((C_.shape[0], B_.shape[1]))
        return cls(tuple(block_sizes), A_, B_, C_, D)

    @property
    def p(self) -> int:
        return self.D.shape[0]

    @property
    def m(self) -> int:
        return self.D.shape[1]

    @property
    def d(self) -> int:
        return len(self.block_sizes)

    @property
    def n(self) -> int:
        return sum(self.block_sizes)

    @property
    def offsets(self) -> tuple[int, ...]:
        """Start index of every channel plus the total dimension."""
        return (0, *accumulate(self.block_sizes))

    @property
    def signature(self) -> tuple[int, int, int]:
        """``(p, m, d)``."""
        return (self.p, self.m, self.d)

    def transpose(self) -> "LfrModel":
        """Dual LFR ``(A^T, C^T, B^T, D^T)`` with the same channels."""
        return LfrModel(self.block_sizes, self.A.T, self.C.T, self.B.T, self.D.T)

    def max_deviation(self, other: "LfrModel") -> float:
        """Largest entry-wise difference of (A, B, C, D)."""
        if (self.signature, self.block_sizes) != (other.signature, other.block_sizes):
            raise DimensionMismatchError(
                (self.signature, self.block_sizes),
                (other.signature, other.block_sizes),
                "LFR dimensions",
            )
        return max(
            max_abs(self.A - other.A),
            max_abs(self.B - other.B),
            max_abs(self.C - other.C),
            max_abs(self.D - other.D),
        )

    def __repr__(self) -> str:
        return f"LfrModel(p={self.p}, m={self.m}, block_sizes={list(self.block_sizes)})"


@dataclass(frozen=True, eq=False)
class CanonicalPartition:
    """Blocks ``H_i`` (p x n_i), ``F_{i,j}`` (n_i x n_j) and ``G_j`` (n_j x m)."""

    H: tuple[Matrix, ...]
    F: tuple[tuple[Matrix, ...], ...]
    G: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        d = len(self.G)
        if d == 0 or len(self.H) != d or len(self.F) != d or any(len(row) != d for row in self.F):
            raise StructuralError("partition needs d >= 1 channels with a d x d grid of F blocks")
        H = tuple(frozen_matrix(h, f"H[{i + 1}]") for i, h in enumerate(self.H))
        G = tuple(frozen_matrix(g, f"G[{i + 1}]") for i, g in enumerate(self.G))
        F = tuple(
            tuple(frozen_matrix(f, f"F[{i + 1},{j + 1}]") for j, f in enumerate(row))
            for i, row in enumerate(self.F)
        )
        object.__setattr__(self, "H", H)
        object.__setattr__(self, "F", F)
        object.__setattr__(self, "G", G)

        sizes = [g.shape[0] for g in G]
        p, m = H[0].shape[0], G[0].shape[1]
        for i in range(d):
            expect_shape(H[i], (p, sizes[i]), f"H[{i + 1}]")
            expect_shape(G[i], (sizes[i], m), f"G[{i + 1}]")
            for j in range(d):
                expect_shape(F[i][j], (sizes[i], sizes[j]), f"F[{i + 1},{j + 1}]")

    @property
    def d(self) -> int:
        return len(self.G)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(g.shape[0] for g in self.G)

    @property
    def p(self) -> int:
        return self.H[0].shape[0]

    @property
    def m(self) -> int:
        return self.G[0].shape[1]

    def transpose(self) -> "CanonicalPartition":
        """Partition of the dual LFR."""
        d = self.d
        return CanonicalPartition(
            H=tuple(g.T for g in self.G),
            F=tuple(tuple(self.F[j][i].T for j in range(d)) for i in range(d)),
            G=tuple(h.T for h in self.H),
        )


def canonical_partition(M: LfrModel) -> CanonicalPartition:
    """Slice A, B, C into channel blocks by cumulative block-size offsets. D is not partitioned."""
    o = M.offsets
    rows = [slice(o[i], o[i + 1]) for i in range(M.d)]
    return CanonicalPartition(
        H=tuple(M.C[:, r] for r in rows),
        F=tuple(tuple(M.A[ri, rj] for rj in rows) for ri in rows),
        G=tuple(M.B[r, :] for r in rows),
    )


def assemble_lfr(part: CanonicalPartition, D: Any) -> LfrModel:
    """Inverse of canonical_partition: reassemble blocks row-major."""
    D_ = frozen_matrix(D, "D")
    if D_.shape != (part.p, part.m):
        raise StructuralError(f"D has shape {D_.shape}, expected {(part.p, part.m)}")
    n = sum(part.block_sizes)
    A = np.block([list(row) for row in part.F]) if n else np.zeros((0, 0))
    B = np.vstack(part.G)
    C = np.hstack(part.H)
    return LfrModel(part.block_sizes, A.reshape(n, n), B, C, D_)
