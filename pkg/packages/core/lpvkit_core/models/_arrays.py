"""Shared conversion of user data into frozen float matrices."""

from typing import Any

import numpy as np

from lpvkit_core.errors import NonFiniteError, StructuralError
from lpvkit_core.numerics import Matrix


def frozen_matrix(value: Any, what: str) -> Matrix:
    """Copy value into a read-only 2-D float array."""
    try:
        X = np.array(value, dtype=float)
    except (TypeError, ValueError) as e:
        raise StructuralError(f"{what} is not a numeric matrix: {e}") from e
    if X.ndim != 2:
        raise StructuralError(f"{what} must be 2-dimensional, got shape {X.shape}")
    if not np.all(np.isfinite(X)):
        raise NonFiniteError(what)
    X.setflags(write=False)
    return X


def expect_shape(X: Matrix, shape: tuple[int, int], what: str) -> None:
    if X.shape != shape:
        raise StructuralError(f"{what} has shape {X.shape}, expected {shape}")
