"""Markov parameters of ALPV models.

For an index sequence ``(i_1, ..., i_k)`` with letters in ``0..n_p``:
length 1 gives ``D_{i_1}``, length k >= 2 gives
``C_{i_k} A_{i_{k-1}} ... A_{i_2} B_{i_1}``.
"""

from collections.abc import Sequence

from lpvkit_core.errors import StructuralError
from lpvkit_core.models import AlpvModel, SeriesTable, Word
from lpvkit_core.numerics import Matrix


def alpv_markov_parameter(sigma: AlpvModel, sequence: Sequence[int]) -> Matrix:
    """Markov parameter of a single index sequence."""
    seq = tuple(int(i) for i in sequence)
    if not seq:
        raise StructuralError("index sequences have length >= 1")
    if any(not 0 <= i <= sigma.n_p for i in seq):
        raise StructuralError(f"index sequence {seq} has letters outside 0..{sigma.n_p}")
    if len(seq) == 1:
        return sigma.D[seq[0]]
    V = sigma.B[seq[0]]
    for i in seq[1:-1]:
        V = sigma.A[i] @ V
    return sigma.C[seq[-1]] @ V


def alpv_markov_table(sigma: AlpvModel, horizon: int) -> SeriesTable:
    """Markov parameters of every index sequence of length 1..horizon.

    Partial products ``A_{i_{k-1}} ... B_{i_1}`` are propagated per prefix, so
    each entry costs one multiplication.
    """
    if horizon < 0:
        raise ValueError(f"horizon must be >= 0, got {horizon}")
    q = sigma.n_p + 1
    coefficients: dict[Word, Matrix] = {}
    if horizon >= 1:
        coefficients.update({(i,): sigma.D[i] for i in range(q)})

    prefixes: dict[Word, Matrix] = {(i,): sigma.B[i] for i in range(q)}
    for k in range(2, horizon + 1):
        extended: dict[Word, Matrix] = {}
        for s, V in prefixes.items():
            for j in range(q):
                coefficients[(*s, j)] = sigma.C[j] @ V
                if k < horizon:
                    extended[(*s, j)] = sigma.A[j] @ V
        prefixes = extended

    return SeriesTable(
        horizon=horizon,
        alphabet=q,
        p=sigma.n_y,
        m=sigma.n_u,
        coefficients=coefficients,
        first_letter=0,
        min_length=1,
    )
