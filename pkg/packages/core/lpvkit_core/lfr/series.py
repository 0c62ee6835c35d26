"""Formal input-output maps of LFRs.

``Y_M(ε) = D``, ``Y_M(i) = H_i G_i`` and
``Y_M(i_1 ... i_k) = H_{i_k} F_{i_k, i_{k-1}} ... F_{i_2, i_1} G_{i_1}``.
"""

from collections.abc import Sequence

from lpvkit_core.models import LfrModel, SeriesTable, Word, canonical_partition, validate_word
from lpvkit_core.numerics import Matrix


def formal_io_coeff(M: LfrModel, word: Sequence[int]) -> Matrix:
    """Coefficient of a single word (letters 1..d)."""
    w = validate_word(word, M.d)
    if not w:
        return M.D
    part = canonical_partition(M)
    V = part.G[w[0] - 1]
    for prev, cur in zip(w, w[1:], strict=False):
        V = part.F[cur - 1][prev - 1] @ V
    return part.H[w[-1] - 1] @ V


def lfr_series_table(M: LfrModel, horizon: int) -> SeriesTable:
    """Coefficients of every word of length 0..horizon.

    Words are extended one letter at a time from their prefix's state-block
    vector, so each entry costs a single block product.
    """
    if horizon < 0:
        raise ValueError(f"horizon must be >= 0, got {horizon}")
    part = canonical_partition(M)
    d = M.d
    coefficients: dict[Word, Matrix] = {(): M.D}
    frontier: dict[Word, Matrix] = {(c,): part.G[c - 1] for c in range(1, d + 1)}
    for k in range(1, horizon + 1):
        extended: dict[Word, Matrix] = {}
        for w, V in frontier.items():
            last = w[-1] - 1
            coefficients[w] = part.H[last] @ V
            if k < horizon:
                for c in range(1, d + 1):
                    extended[(*w, c)] = part.F[c - 1][last] @ V
        frontier = extended

    return SeriesTable(horizon=horizon, alphabet=d, p=M.p, m=M.m, coefficients=coefficients)
