"""Invariant subspaces generated by families of matrices.

Each routine iterates an image recursion on rank-revealed bases until the
dimension stops growing. Monotone ranks bounded by the ambient dimension
make the loops terminate.
"""

from collections.abc import Callable, Sequence

import numpy as np

from lpvkit_core.numerics.rank import Matrix, range_basis
from lpvkit_core.numerics.tolerance import DEFAULT_TOLERANCE, RankTolerance

BasisFn = Callable[[Matrix, RankTolerance], Matrix]


def invariant_span(
    generators: Sequence[Matrix],
    maps: Sequence[Matrix],
    tol: RankTolerance = DEFAULT_TOLERANCE,
    basis: BasisFn = range_basis,
) -> tuple[Matrix, int]:
    """Basis of the smallest subspace holding the generators and closed under maps.

    Iterates ``V_0 = [g...]``, ``V_{k+1} = basis([V_0, M_0 V_k, ..., M_q V_k])``
    until the dimension is unchanged for one step. ``basis`` may be
    range_basis (orthonormal) or compress_columns (keeps row correspondences).

    Returns:
        The basis and the number of steps taken.
    """
    seed = np.hstack([np.asarray(g, dtype=float) for g in generators])
    V = basis(seed, tol)
    steps = 0
    while True:
        steps += 1
        nxt = basis(np.hstack([seed, *(M @ V for M in maps)]), tol)
        stable = nxt.shape[1] == V.shape[1]
        V = nxt
        if stable:
            return V, steps


def channel_spans(
    generators: Sequence[Matrix],
    couplings: Sequence[Sequence[Matrix]],
    tol: RankTolerance = DEFAULT_TOLERANCE,
    basis: BasisFn = range_basis,
) -> tuple[list[Matrix], int]:
    """Per-channel reachable bases for a block recursion.

    ``V_i <- basis([g_i, C_{i,1} V_1, ..., C_{i,d} V_d])`` is iterated until
    every channel's dimension is unchanged for one step.

    Returns:
        The bases and the number of steps taken.
    """
    d = len(generators)
    gens = [np.asarray(g, dtype=float) for g in generators]
    bases = [basis(g, tol) for g in gens]
    steps = 0
    while True:
        steps += 1
        nxt = [
            basis(np.hstack([gens[i], *(couplings[i][j] @ bases[j] for j in range(d))]), tol)
            for i in range(d)
        ]
        stable = all(a.shape[1] == b.shape[1] for a, b in zip(nxt, bases, strict=True))
        bases = nxt
        if stable:
            return bases, steps
