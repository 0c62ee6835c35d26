"""Input-output equivalence of ALPV models."""

import numpy as np
from scipy import linalg

from lpvkit_core.alpv.markov import alpv_markov_table
from lpvkit_core.alpv.reachability import reachable_basis
from lpvkit_core.errors import DimensionMismatchError
from lpvkit_core.models import AlpvModel, count_words
from lpvkit_core.numerics import DEFAULT_TOLERANCE, RankTolerance, close_enough, max_abs
from lpvkit_core.tracing import SpanAttributes, get_tracer

_tracer = get_tracer("lpvkit.alpv")


def alpv_equivalence_horizon(s1: AlpvModel, s2: AlpvModel) -> int:
    """Sequence length that decides equivalence.

    A length-k sequence holds k - 2 factors A, and the difference model of
    dimension nx1 + nx2 is determined by A-products up to length nx1 + nx2 - 1.
    """
    return s1.n_x + s2.n_x + 1


def alpv_difference_model(s1: AlpvModel, s2: AlpvModel) -> AlpvModel:
    """Model whose Markov parameters are those of s1 minus those of s2."""
    _check_signature(s1, s2)
    return AlpvModel(
        tuple(linalg.block_diag(a1, a2) for a1, a2 in zip(s1.A, s2.A, strict=True)),
        tuple(np.vstack([b1, b2]) for b1, b2 in zip(s1.B, s2.B, strict=True)),
        tuple(np.hstack([c1, -c2]) for c1, c2 in zip(s1.C, s2.C, strict=True)),
        tuple(d1 - d2 for d1, d2 in zip(s1.D, s2.D, strict=True)),
    )


def alpv_io_equivalent(
    s1: AlpvModel,
    s2: AlpvModel,
    tol: RankTolerance = DEFAULT_TOLERANCE,
    word_budget: int = 4096,
) -> bool:
    """Whether two ALPVs have the same input-output function.

    Compares Markov tables up to alpv_equivalence_horizon when the table
    holds at most ``word_budget`` sequences; otherwise checks that the
    difference model's output map vanishes on its reachable subspace.
    """
    _check_signature(s1, s2)
    with _tracer.start_as_current_span("alpv.io_equivalent") as span:
        horizon = alpv_equivalence_horizon(s1, s2)
        if count_words(s1.n_p + 1, horizon, min_length=1) <= word_budget:
            method = "markov_table"
            verdict = alpv_markov_table(s1, horizon).matches(alpv_markov_table(s2, horizon), tol)
        else:
            method = "reachable_subspace"
            verdict = _difference_vanishes(s1, s2, tol)
        span.set_attribute(SpanAttributes.METHOD, method)
        span.set_attribute(SpanAttributes.HORIZON, horizon)
        span.set_attribute(SpanAttributes.VERDICT, verdict)
        return verdict


def _difference_vanishes(s1: AlpvModel, s2: AlpvModel, tol: RankTolerance) -> bool:
    if not all(close_enough(d1, d2, tol) for d1, d2 in zip(s1.D, s2.D, strict=True)):
        return False
    diff = alpv_difference_model(s1, s2)
    V, _ = reachable_basis(diff, tol)
    scale = max([1.0, *(max_abs(c) for c in diff.C)])
    return all(max_abs(c @ V) <= tol.match_tol * scale for c in diff.C)


def _check_signature(s1: AlpvModel, s2: AlpvModel) -> None:
    if s1.signature != s2.signature:
        raise DimensionMismatchError(s1.signature, s2.signature, "(n_p, n_u, n_y)")
