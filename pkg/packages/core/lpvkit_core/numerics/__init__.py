"""Rank-revealing and factorization primitives with a single tolerance policy."""

from lpvkit_core.numerics.linear_maps import left_multiplier, right_multiplier, unvec, vec
from lpvkit_core.numerics.nullspace import AffineSolution, affine_nullspace, draw_members
from lpvkit_core.numerics.rank import (
    Matrix,
    close_enough,
    compress_columns,
    full_rank_factorization,
    is_invertible,
    kernel_basis,
    max_abs,
    numerical_rank,
    range_basis,
)
from lpvkit_core.numerics.subspace import channel_spans, invariant_span
from lpvkit_core.numerics.tolerance import DEFAULT_TOLERANCE, RankTolerance

__all__ = [
    "DEFAULT_TOLERANCE",
    "AffineSolution",
    "Matrix",
    "RankTolerance",
    "affine_nullspace",
    "channel_spans",
    "close_enough",
    "compress_columns",
    "draw_members",
    "full_rank_factorization",
    "invariant_span",
    "is_invertible",
    "kernel_basis",
    "left_multiplier",
    "max_abs",
    "numerical_rank",
    "range_basis",
    "right_multiplier",
    "unvec",
    "vec",
]
