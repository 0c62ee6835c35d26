"""Acceptance checks on the motivating example."""

import pytest

from lpvkit_core.alpv import AlpvMinimality, alpv_obs_matrix, alpv_reach_matrix, is_minimal_alpv
from lpvkit_core.lfr import (
    LfrMinimality,
    find_lfr_isomorphism,
    is_minimal_lfr,
    lfr_formally_equivalent,
    lfr_series_table,
    search_lfr_isomorphism,
)
from lpvkit_core.models import LfrModel
from lpvkit_core.numerics import RankTolerance, max_abs, numerical_rank
from lpvkit_core.reference_models import (
    ROUNDING_TOL,
    motivating_alpv,
    motivating_lfr,
    motivating_lfr_alt,
    rounded_minimal_lfr,
)
from lpvkit_core.transform import lpv_to_lfr_mr


class TestFiveStateRealizations:
    """The two five-state LFRs share their series but not their coordinates."""

    def test_series_agree_up_to_length_12(self) -> None:
        first = lfr_series_table(motivating_lfr(), 12)
        second = lfr_series_table(motivating_lfr_alt(), 12)
        assert len(first) == 2**13 - 1
        scale = max(1.0, first.max_entry(), second.max_entry())
        assert first.max_deviation(second) <= 1e-9 * scale

    def test_not_isomorphic(self) -> None:
        assert find_lfr_isomorphism(motivating_lfr(), motivating_lfr_alt()) is None

    def test_search_reports_why(self) -> None:
        outcome = search_lfr_isomorphism(motivating_lfr(), motivating_lfr_alt())
        assert not outcome.found
        assert outcome.isomorphism is None


class TestMinimalRealization:
    """The MR transform of the two-state ALPV."""

    @pytest.fixture(scope="class")
    def mr(self) -> LfrModel:
        return lpv_to_lfr_mr(motivating_alpv())

    def test_alpv_ranks(self) -> None:
        sigma = motivating_alpv()
        assert numerical_rank(alpv_reach_matrix(sigma, 1)) == 2
        assert numerical_rank(alpv_obs_matrix(sigma, 1)) == 2
        assert is_minimal_alpv(sigma) == AlpvMinimality.MINIMAL

    def test_blocks_and_minimality(self, mr: LfrModel) -> None:
        assert mr.block_sizes == (2, 2)
        assert mr.n == 4
        assert is_minimal_lfr(mr) == LfrMinimality.MINIMAL

    def test_equivalent_to_five_state_lfrs(self, mr: LfrModel) -> None:
        assert lfr_formally_equivalent(mr, motivating_lfr())
        assert lfr_formally_equivalent(mr, motivating_lfr_alt())

    def test_isomorphic_to_rounded_lfr(self, mr: LfrModel) -> None:
        rounded = RankTolerance().with_match(ROUNDING_TOL)
        outcome = search_lfr_isomorphism(mr, rounded_minimal_lfr(), rounded)
        assert outcome.found
        assert outcome.isomorphism is not None
        assert outcome.isomorphism.block_sizes == (2, 2)
        hat = rounded_minimal_lfr()
        scale = max(1.0, *(max_abs(X) for X in (mr.A, mr.B, mr.C, hat.A, hat.B, hat.C)))
        assert outcome.residual <= ROUNDING_TOL * scale
