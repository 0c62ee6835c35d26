"""Tolerance policy shared by every rank and equality decision."""

from pydantic import BaseModel, ConfigDict, Field


class RankTolerance(BaseModel):
    """Thresholds for numerical rank and coefficient comparisons.

    A singular value counts towards the rank when it exceeds
    ``max(rel_tol * sigma_max, abs_tol)``; values exactly at the threshold
    do not count.
    """

    model_config = ConfigDict(frozen=True)

    rel_tol: float = Field(default=1e-9, gt=0)
    abs_tol: float = Field(default=1e-12, gt=0)
    match_tol: float = Field(default=1e-8, gt=0)

    def threshold(self, sigma_max: float) -> float:
        """Singular value cut-off for a matrix whose largest singular value is sigma_max."""
        return max(self.rel_tol * sigma_max, self.abs_tol)

    def with_match(self, match_tol: float) -> "RankTolerance":
        """Copy with a different equality tolerance."""
        return self.model_copy(update={"match_tol": match_tol})


DEFAULT_TOLERANCE = RankTolerance()
