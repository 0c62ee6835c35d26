"""Finite tabulations of formal input-output maps and Markov parameters."""

from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field

import numpy as np

from lpvkit_core.errors import DimensionMismatchError
from lpvkit_core.models.words import Word, count_words
from lpvkit_core.numerics import DEFAULT_TOLERANCE, Matrix, RankTolerance, max_abs


@dataclass(frozen=True, eq=False)
class SeriesTable:
    """Coefficient matrix for every word of length ``min_length..horizon``.

    LFR tables use letters ``1..alphabet`` and include the empty word.
    ALPV Markov tables use letters ``0..alphabet-1`` and start at length 1.
    """

    horizon: int
    alphabet: int
    p: int
    m: int
    coefficients: Mapping[Word, Matrix] = field(repr=False)
    first_letter: int = 1
    min_length: int = 0

    def __post_init__(self) -> None:
        expected = count_words(self.alphabet, self.horizon, self.min_length)
        if len(self.coefficients) != expected:
            raise ValueError(
                f"table holds {len(self.coefficients)} words, expected {expected}"
            )
        for w, c in self.coefficients.items():
            if c.shape != (self.p, self.m):
                raise ValueError(f"coefficient of {w} has shape {c.shape}")

    def __getitem__(self, word: Word) -> Matrix:
        return self.coefficients[tuple(word)]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.coefficients)

    def items(self) -> Iterator[tuple[Word, Matrix]]:
        yield from self.coefficients.items()

    def max_deviation(self, other: "SeriesTable") -> float:
        """Largest entry-wise difference over the words both tables cover."""
        if (self.alphabet, self.first_letter, self.p, self.m) != (
            other.alphabet,
            other.first_letter,
            other.p,
            other.m,
        ):
            raise DimensionMismatchError(
                (self.alphabet, self.p, self.m), (other.alphabet, other.p, other.m), "series"
            )
        worst = 0.0
        for w, c in self.coefficients.items():
            if w in other.coefficients:
                worst = max(worst, max_abs(c - other.coefficients[w]))
        return worst

    def matches(self, other: "SeriesTable", tol: RankTolerance = DEFAULT_TOLERANCE) -> bool:
        """Deviation within match_tol, scaled by the largest entry of either table."""
        scale = max(1.0, self.max_entry(), other.max_entry())
        return self.max_deviation(other) <= tol.match_tol * scale

    def max_entry(self) -> float:
        """Largest absolute coefficient entry."""
        if not self.coefficients:
            return 0.0
        return max(max_abs(c) for c in self.coefficients.values())

    def is_zero(self) -> bool:
        return all(not np.any(c) for c in self.coefficients.values())
