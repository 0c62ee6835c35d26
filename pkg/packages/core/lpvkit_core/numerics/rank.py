"""Rank-revealing primitives built on the SVD."""

import numpy as np
from numpy.typing import NDArray
from scipy import linalg

from lpvkit_core.errors import NonFiniteError
from lpvkit_core.numerics.tolerance import DEFAULT_TOLERANCE, RankTolerance

Matrix = NDArray[np.float64]


def ensure_finite(X: Matrix, what: str = "matrix") -> None:
    """Raise NonFiniteError if X has NaN or infinite entries."""
    if not np.all(np.isfinite(X)):
        raise NonFiniteError(what)


def _rank_from_singular_values(s: NDArray[np.float64], tol: RankTolerance) -> int:
    if s.size == 0:
        return 0
    return int(np.count_nonzero(s > tol.threshold(float(s[0]))))


def numerical_rank(X: Matrix, tol: RankTolerance = DEFAULT_TOLERANCE) -> int:
    """Number of singular values above the tolerance threshold.

    Empty and zero matrices have rank 0.
    """
    X = np.asarray(X, dtype=float)
    ensure_finite(X)
    if X.size == 0:
        return 0
    return _rank_from_singular_values(linalg.svdvals(X), tol)


def full_rank_factorization(
    X: Matrix, tol: RankTolerance = DEFAULT_TOLERANCE
) -> tuple[Matrix, Matrix]:
    """Factor X (a x b) as L @ R with L (a x r) of full column rank, R (r x b) of full row rank.

    The SVD is truncated at the numerical rank r and the singular values are
    split evenly between the two factors.
    """
    X = np.asarray(X, dtype=float)
    ensure_finite(X)
    a, b = X.shape
    if X.size == 0:
        return np.zeros((a, 0)), np.zeros((0, b))

    U, s, Vt = linalg.svd(X, full_matrices=False)
    r = _rank_from_singular_values(s, tol)
    root = np.sqrt(s[:r])
    return U[:, :r] * root, root[:, None] * Vt[:r]


def range_basis(X: Matrix, tol: RankTolerance = DEFAULT_TOLERANCE) -> Matrix:
    """Orthonormal basis of the numerical column space of X (shape a x r)."""
    X = np.asarray(X, dtype=float)
    a = X.shape[0]
    if X.size == 0:
        return np.zeros((a, 0))
    U, s, _ = linalg.svd(X, full_matrices=False)
    r = _rank_from_singular_values(s, tol)
    return np.ascontiguousarray(U[:, :r])


def kernel_basis(X: Matrix, tol: RankTolerance = DEFAULT_TOLERANCE) -> Matrix:
    """Orthonormal basis of the numerical null space of X (shape b x (b - r))."""
    X = np.asarray(X, dtype=float)
    b = X.shape[1]
    if X.size == 0:
        return np.eye(b)
    _, s, Vt = linalg.svd(X, full_matrices=True)
    r = _rank_from_singular_values(s, tol)
    return np.ascontiguousarray(Vt[r:].T)


def compress_columns(X: Matrix, tol: RankTolerance = DEFAULT_TOLERANCE) -> Matrix:
    """Replace X by X @ V_r, a matrix with the same column space and r columns.

    Right multiplication keeps column correspondences between stacked blocks of X.
    """
    X = np.asarray(X, dtype=float)
    a = X.shape[0]
    if X.size == 0:
        return np.zeros((a, 0))
    U, s, _ = linalg.svd(X, full_matrices=False)
    r = _rank_from_singular_values(s, tol)
    return U[:, :r] * s[:r]


def is_invertible(T: Matrix, tol: RankTolerance = DEFAULT_TOLERANCE) -> bool:
    """Square and of full numerical rank."""
    T = np.asarray(T, dtype=float)
    if T.ndim != 2 or T.shape[0] != T.shape[1]:
        return False
    return numerical_rank(T, tol) == T.shape[0]


def max_abs(X: Matrix) -> float:
    """Largest absolute entry, 0 for empty matrices."""
    X = np.asarray(X, dtype=float)
    return float(np.max(np.abs(X))) if X.size else 0.0


def close_enough(X: Matrix, Y: Matrix, tol: RankTolerance = DEFAULT_TOLERANCE) -> bool:
    """Entry-wise comparison scaled by the magnitude of the operands."""
    scale = max(1.0, max_abs(X), max_abs(Y))
    return max_abs(np.asarray(X) - np.asarray(Y)) <= tol.match_tol * scale
