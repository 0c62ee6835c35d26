"""Random model generators for property checks.

All generators take a numpy ``Generator`` so runs are reproducible. State
matrices are scaled so that ``A(p)`` stays contractive for ``|p_i| <= 1``,
which keeps simulated outputs of moderate size over short horizons.
"""

import math
from collections.abc import Sequence

import numpy as np
import scipy.linalg

from lpvkit_core.errors import StructuralError
from lpvkit_core.models import (
    AlpvIsomorphism,
    AlpvModel,
    CanonicalPartition,
    InputSignal,
    LfrIsomorphism,
    LfrModel,
    ScheduleSignal,
    apply_alpv_isomorphism,
    apply_lfr_isomorphism,
    assemble_lfr,
    canonical_partition,
)
from lpvkit_core.numerics import Matrix


def random_alpv(
    rng: np.random.Generator,
    n_x: int,
    n_p: int,
    n_u: int = 1,
    n_y: int = 1,
    feedthrough: bool = True,
) -> AlpvModel:
    """Gaussian ALPV with ``||A(p)|| < 1`` (roughly) on the unit box."""
    a_scale = 0.4 / ((n_p + 1) * math.sqrt(max(n_x, 1)))
    A = [rng.standard_normal((n_x, n_x)) * a_scale for _ in range(n_p + 1)]
    B = [rng.standard_normal((n_x, n_u)) for _ in range(n_p + 1)]
    C = [rng.standard_normal((n_y, n_x)) for _ in range(n_p + 1)]
    D = [
        rng.standard_normal((n_y, n_u)) if feedthrough else np.zeros((n_y, n_u))
        for _ in range(n_p + 1)
    ]
    return AlpvModel(tuple(A), tuple(B), tuple(C), tuple(D))


def random_lfr(
    rng: np.random.Generator,
    block_sizes: Sequence[int],
    p: int = 1,
    m: int = 1,
) -> LfrModel:
    """Gaussian LFR with no structural zeros (generically not an LPV-LFR)."""
    n = sum(block_sizes)
    scale = 0.5 / math.sqrt(max(n, 1) * len(block_sizes))
    return LfrModel(
        tuple(block_sizes),
        rng.standard_normal((n, n)) * scale,
        rng.standard_normal((n, m)),
        rng.standard_normal((p, n)),
        rng.standard_normal((p, m)),
    )


def random_lpv_lfr(
    rng: np.random.Generator,
    block_sizes: Sequence[int],
    p: int = 1,
    m: int = 1,
) -> LfrModel:
    """Random LFR whose blocks F_{i,j}, i, j > 1, are exactly zero."""
    M = random_lfr(rng, block_sizes, p, m)
    part = canonical_partition(M)
    d = M.d
    F = [list(row) for row in part.F]
    for i in range(1, d):
        for j in range(1, d):
            F[i][j] = np.zeros_like(F[i][j])
    return assemble_lfr(
        CanonicalPartition(H=part.H, F=tuple(tuple(row) for row in F), G=part.G), M.D
    )


def random_invertible(rng: np.random.Generator, n: int) -> Matrix:
    """Well-conditioned random matrix: ``Q1 diag(s) Q2`` with s in [0.5, 2]."""
    if n == 0:
        return np.zeros((0, 0))
    q1, _ = scipy.linalg.qr(rng.standard_normal((n, n)))
    q2, _ = scipy.linalg.qr(rng.standard_normal((n, n)))
    return np.asarray(q1 @ np.diag(rng.uniform(0.5, 2.0, n)) @ q2)


def random_lfr_isomorphism_blocks(
    rng: np.random.Generator, block_sizes: Sequence[int]
) -> list[Matrix]:
    return [random_invertible(rng, n) for n in block_sizes]


def pad_unreachable(rng: np.random.Generator, sigma: AlpvModel, extra: int) -> AlpvModel:
    """Append ``extra`` states that no input reaches but the output sees."""
    nx = sigma.n_x
    A, B, C = [], [], []
    for i in range(sigma.n_p + 1):
        top = np.hstack([sigma.A[i], rng.standard_normal((nx, extra)) * 0.1])
        bottom = np.hstack([np.zeros((extra, nx)), _small_square(rng, extra, sigma.n_p)])
        A.append(np.vstack([top, bottom]))
        B.append(np.vstack([sigma.B[i], np.zeros((extra, sigma.n_u))]))
        C.append(np.hstack([sigma.C[i], rng.standard_normal((sigma.n_y, extra))]))
    return AlpvModel(tuple(A), tuple(B), tuple(C), sigma.D)


def pad_unobservable(rng: np.random.Generator, sigma: AlpvModel, extra: int) -> AlpvModel:
    """Append ``extra`` states driven by the input and the state but hidden from the output."""
    nx = sigma.n_x
    A, B, C = [], [], []
    for i in range(sigma.n_p + 1):
        top = np.hstack([sigma.A[i], np.zeros((nx, extra))])
        bottom = np.hstack(
            [rng.standard_normal((extra, nx)) * 0.1, _small_square(rng, extra, sigma.n_p)]
        )
        A.append(np.vstack([top, bottom]))
        B.append(np.vstack([sigma.B[i], rng.standard_normal((extra, sigma.n_u))]))
        C.append(np.hstack([sigma.C[i], np.zeros((sigma.n_y, extra))]))
    return AlpvModel(tuple(A), tuple(B), tuple(C), sigma.D)


def duplicate_states(sigma: AlpvModel) -> AlpvModel:
    """Two copies of the state with averaged outputs: neither span-reachable nor observable."""
    A = tuple(scipy.linalg.block_diag(a, a) for a in sigma.A)
    B = tuple(np.vstack([b, b]) for b in sigma.B)
    C = tuple(np.hstack([c / 2, c / 2]) for c in sigma.C)
    return AlpvModel(A, B, C, sigma.D)


def transform_alpv(rng: np.random.Generator, sigma: AlpvModel) -> AlpvModel:
    """Random state-coordinate change of sigma (isomorphic by construction)."""
    T = AlpvIsomorphism(random_invertible(rng, sigma.n_x))
    return apply_alpv_isomorphism(sigma, T)


def transform_lfr(rng: np.random.Generator, M: LfrModel) -> LfrModel:
    """Random block-diagonal coordinate change of M (isomorphic by construction)."""
    T = LfrIsomorphism(tuple(random_lfr_isomorphism_blocks(rng, M.block_sizes)))
    return apply_lfr_isomorphism(M, T)


def pad_with_junk(rng: np.random.Generator, M: LfrModel, extra: int = 1) -> LfrModel:
    """Grow channel 2 of an LPV-LFR by ``extra`` unreachable states.

    The new states feed the rest of the model through nonzero entries of
    F_{2,2}, so the result is not an LPV-LFR but keeps the series of M.
    """
    if M.d < 2:
        raise StructuralError("junk padding needs at least two channels")
    part = canonical_partition(M)
    d, n2 = M.d, M.block_sizes[1]
    F = [list(row) for row in part.F]
    for i in range(d):
        rows = F[i][1].shape[0]
        outgoing = rng.standard_normal((rows, extra)) * 0.1
        if i == 1:
            F[1][1] = np.block(
                [[F[1][1], outgoing], [np.zeros((extra, n2)), np.zeros((extra, extra))]]
            )
        else:
            F[i][1] = np.hstack([F[i][1], outgoing])
    for j in range(d):
        if j != 1:
            F[1][j] = np.vstack([F[1][j], np.zeros((extra, F[1][j].shape[1]))])
    H = list(part.H)
    G = list(part.G)
    H[1] = np.hstack([H[1], rng.standard_normal((M.p, extra))])
    G[1] = np.vstack([G[1], np.zeros((extra, M.m))])
    return assemble_lfr(
        CanonicalPartition(H=tuple(H), F=tuple(tuple(row) for row in F), G=tuple(G)), M.D
    )


def plant_forbidden_coefficient(rng: np.random.Generator, M: LfrModel) -> LfrModel:
    """Fill F_{2,2} of an LPV-LFR with random entries.

    Generically this makes ``H_2 F_{2,2} G_2`` nonzero, so no LPV-LFR is
    formally equivalent to the result.
    """
    if M.d < 2 or M.block_sizes[1] == 0:
        raise StructuralError("planting needs a nonempty second channel")
    part = canonical_partition(M)
    F = [list(row) for row in part.F]
    F[1][1] = rng.standard_normal(F[1][1].shape)
    return assemble_lfr(CanonicalPartition(H=part.H, F=tuple(tuple(r) for r in F), G=part.G), M.D)


def random_signals(
    rng: np.random.Generator, horizon: int, n_u: int, n_p: int
) -> tuple[InputSignal, ScheduleSignal]:
    """Gaussian input and a schedule drawn uniformly from ``[-1, 1]``."""
    u = InputSignal(rng.standard_normal((horizon, n_u)))
    p = ScheduleSignal(rng.uniform(-1.0, 1.0, (horizon, n_p)))
    return u, p


def _small_square(rng: np.random.Generator, n: int, n_p: int) -> Matrix:
    return rng.standard_normal((n, n)) * (0.4 / ((n_p + 1) * math.sqrt(max(n, 1))))
