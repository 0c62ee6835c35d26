"""Column-major vectorization of linear matrix equations.

``vec(A X B) = (B^T kron A) vec(X)`` with vec stacking columns.
"""

import numpy as np

from lpvkit_core.numerics.rank import Matrix


def vec(X: Matrix) -> Matrix:
    return np.asarray(X, dtype=float).reshape(-1, order="F")


def unvec(x: Matrix, rows: int, cols: int) -> Matrix:
    return np.asarray(x, dtype=float).reshape((rows, cols), order="F")


def right_multiplier(A: Matrix, rows: int) -> Matrix:
    """Matrix of ``X -> X A`` for X with the given number of rows."""
    return np.kron(np.asarray(A, dtype=float).T, np.eye(rows))


def left_multiplier(A: Matrix, cols: int) -> Matrix:
    """Matrix of ``X -> A X`` for X with the given number of columns."""
    return np.kron(np.eye(cols), np.asarray(A, dtype=float))
