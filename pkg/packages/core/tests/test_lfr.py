"""Tests for LFR series, minimality, isomorphism and LPV-LFR structure."""

import numpy as np
import pytest

from lpvkit_core.errors import DimensionMismatchError, StructuralError
from lpvkit_core.generators import (
    pad_with_junk,
    plant_forbidden_coefficient,
    random_lfr,
    random_lfr_isomorphism_blocks,
    random_lpv_lfr,
    transform_lfr,
)
from lpvkit_core.lfr import (
    LfrMinimality,
    equivalent_to_lpv_lfr,
    equivalent_to_lpv_lfr_by_minimization,
    find_lfr_isomorphism,
    formal_io_coeff,
    is_lpv_lfr,
    is_minimal_lfr,
    lfr_difference_model,
    lfr_equivalence_horizon,
    lfr_formally_equivalent,
    lfr_obs_matrices,
    lfr_reach_matrices,
    lfr_series_table,
    lpv_structure_report,
    minimize_lfr,
    reachable_ranks,
    reduce_lfr,
    search_lfr_isomorphism,
)
from lpvkit_core.models import (
    IsomorphismStatus,
    LfrIsomorphism,
    LfrModel,
    apply_lfr_isomorphism,
    lfr_isomorphism_residual,
)
from lpvkit_core.numerics import numerical_rank


class TestSeries:
    """Formal input-output coefficients."""

    @pytest.mark.parametrize(
        ("word", "expected"),
        [((), 0.0), ((1,), 1.0), ((2,), 0.0), ((1, 2), 0.0), ((2, 1), 0.0), ((2, 1, 2), 1.0)],
    )
    def test_reference_coefficients(
        self, lfr_m: LfrModel, word: tuple[int, ...], expected: float
    ) -> None:
        assert formal_io_coeff(lfr_m, word)[0, 0] == pytest.approx(expected)

    def test_forbidden_words_vanish_for_lpv_lfr(self, lfr_m: LfrModel) -> None:
        assert formal_io_coeff(lfr_m, (2, 2))[0, 0] == 0.0
        assert formal_io_coeff(lfr_m, (1, 2, 2))[0, 0] == 0.0

    def test_letter_outside_alphabet(self, lfr_m: LfrModel) -> None:
        with pytest.raises(StructuralError):
            formal_io_coeff(lfr_m, (3,))

    def test_table_agrees_with_direct_products(self, rng: np.random.Generator) -> None:
        M = random_lfr(rng, (2, 1, 2), p=2, m=1)
        table = lfr_series_table(M, 3)
        assert len(table) == 1 + 3 + 9 + 27
        for word, coefficient in table.items():
            assert np.allclose(coefficient, formal_io_coeff(M, word))

    def test_table_of_horizon_zero(self, lfr_m: LfrModel) -> None:
        table = lfr_series_table(lfr_m, 0)
        assert list(table) == [()]
        with pytest.raises(ValueError):
            lfr_series_table(lfr_m, -1)


class TestReachability:
    """Per-channel reachability and observability."""

    def test_matrix_shapes(self, lfr_m: LfrModel) -> None:
        R0 = lfr_reach_matrices(lfr_m, 0)
        assert [R.shape for R in R0] == [(2, 1), (3, 1)]
        R1 = lfr_reach_matrices(lfr_m, 1)
        assert [R.shape for R in R1] == [(2, 3), (3, 3)]
        O1 = lfr_obs_matrices(lfr_m, 1)
        assert [O.shape for O in O1] == [(3, 2), (3, 3)]

    def test_reference_model_is_reachable(self, lfr_m: LfrModel) -> None:
        assert reachable_ranks(lfr_m) == (2, 3)

    def test_negative_steps(self, lfr_m: LfrModel) -> None:
        with pytest.raises(ValueError):
            lfr_reach_matrices(lfr_m, -1)

    def test_channel_ranks_never_drop_with_more_steps(
        self, rng: np.random.Generator, lfr_m: LfrModel
    ) -> None:
        for M in (lfr_m, random_lfr(rng, (2, 1, 3)), pad_with_junk(rng, lfr_m, extra=2)):
            per_step = [[numerical_rank(R) for R in lfr_reach_matrices(M, k)] for k in range(6)]
            for channel, size in enumerate(M.block_sizes):
                ranks = [step[channel] for step in per_step]
                assert ranks == sorted(ranks)
                assert ranks[-1] <= size


class TestMinimality:
    """Minimality verdicts and minimization."""

    def test_reference_model_has_an_unobservable_state(self, lfr_m: LfrModel) -> None:
        assert is_minimal_lfr(lfr_m) == LfrMinimality.NOT_OBSERVABLE

    def test_random_lfr_is_minimal(self, rng: np.random.Generator) -> None:
        assert is_minimal_lfr(random_lfr(rng, (2, 3))) == LfrMinimality.MINIMAL

    def test_junk_states_are_unreachable(self, rng: np.random.Generator) -> None:
        M = random_lpv_lfr(rng, (2, 2))
        assert is_minimal_lfr(pad_with_junk(rng, M, 2)) == LfrMinimality.NOT_REACHABLE

    def test_reference_model_reduces_to_four_states(self, lfr_m: LfrModel) -> None:
        reduced, report = reduce_lfr(lfr_m)
        assert reduced.n == 4
        assert report.original == (2, 3)
        assert report.final_dim == 4
        assert is_minimal_lfr(reduced) == LfrMinimality.MINIMAL
        assert lfr_formally_equivalent(reduced, lfr_m)

    def test_both_five_state_models_reduce_to_four(self, lfr_m_alt: LfrModel) -> None:
        assert minimize_lfr(lfr_m_alt).n == 4

    def test_minimize_is_idempotent(self, rng: np.random.Generator) -> None:
        M = random_lfr(rng, (2, 2))
        reduced, report = reduce_lfr(M)
        assert not report.changed
        assert reduced.block_sizes == (2, 2)

    def test_single_channel(self) -> None:
        """With d = 1 minimization is the LTI Kalman reduction."""
        M = LfrModel.from_matrices(
            (3,),
            A=[[0.5, 0.0, 0.0], [0.0, 0.2, 0.0], [0.0, 0.0, 0.1]],
            B=[[1.0], [1.0], [0.0]],
            C=[[1.0, 0.0, 1.0]],
        )
        assert minimize_lfr(M).n == 1


class TestEquivalence:
    """Formal equivalence."""

    def test_reference_models_are_equivalent(self, lfr_m: LfrModel, lfr_m_alt: LfrModel) -> None:
        assert lfr_equivalence_horizon(lfr_m, lfr_m_alt) == 10
        assert lfr_formally_equivalent(lfr_m, lfr_m_alt)

    def test_subspace_method_agrees(self, lfr_m: LfrModel, lfr_m_alt: LfrModel) -> None:
        assert lfr_formally_equivalent(lfr_m, lfr_m_alt, word_budget=1)

    def test_block_transformation_keeps_series(
        self, rng: np.random.Generator, lfr_m: LfrModel
    ) -> None:
        """Every coefficient up to length 10 survives a block-diagonal change of basis."""
        T = LfrIsomorphism(tuple(random_lfr_isomorphism_blocks(rng, lfr_m.block_sizes)))
        image = apply_lfr_isomorphism(lfr_m, T)
        table = lfr_series_table(lfr_m, 10)
        assert len(table.coefficients) == 2**11 - 1
        assert table.matches(lfr_series_table(image, 10))

    def test_planted_coefficient_breaks_equivalence(
        self, rng: np.random.Generator, lfr_m: LfrModel
    ) -> None:
        planted = plant_forbidden_coefficient(rng, lfr_m)
        assert not lfr_formally_equivalent(lfr_m, planted)
        assert not lfr_formally_equivalent(lfr_m, planted, word_budget=1)

    def test_feedthrough_difference(self, lfr_m: LfrModel) -> None:
        shifted = LfrModel(lfr_m.block_sizes, lfr_m.A, lfr_m.B, lfr_m.C, lfr_m.D + 1.0)
        assert not lfr_formally_equivalent(lfr_m, shifted, word_budget=1)

    def test_signature_mismatch(self, rng: np.random.Generator, lfr_m: LfrModel) -> None:
        with pytest.raises(DimensionMismatchError):
            lfr_formally_equivalent(lfr_m, random_lfr(rng, (1, 1, 1)))

    def test_difference_model_series_vanishes(self, lfr_m: LfrModel, lfr_m_alt: LfrModel) -> None:
        diff = lfr_difference_model(lfr_m, lfr_m_alt)
        assert diff.block_sizes == (4, 6)
        assert lfr_series_table(diff, 5).max_entry() < 1e-9


class TestIsomorphism:
    """Isomorphism search."""

    def test_reference_models_are_not_isomorphic(
        self, lfr_m: LfrModel, lfr_m_alt: LfrModel
    ) -> None:
        outcome = search_lfr_isomorphism(lfr_m, lfr_m_alt)
        assert not outcome.found
        assert outcome.method == "affine"

    def test_minimal_models_via_reachability(self, rng: np.random.Generator) -> None:
        M = random_lfr(rng, (2, 3))
        image = transform_lfr(rng, M)
        outcome = search_lfr_isomorphism(M, image)
        assert outcome.status == IsomorphismStatus.FOUND
        assert outcome.method == "reachability"
        assert outcome.isomorphism is not None
        assert lfr_isomorphism_residual(M, image, outcome.isomorphism.blocks) < 1e-8

    def test_non_minimal_models_via_affine_system(
        self, rng: np.random.Generator, lfr_m: LfrModel
    ) -> None:
        image = transform_lfr(rng, lfr_m)
        outcome = search_lfr_isomorphism(lfr_m, image, draws=16, seed=5)
        assert outcome.status == IsomorphismStatus.FOUND
        assert outcome.method == "affine"
        assert outcome.residual < 1e-6

    def test_block_size_mismatch(self, lfr_m: LfrModel, lfr_m_hat: LfrModel) -> None:
        outcome = search_lfr_isomorphism(lfr_m, lfr_m_hat)
        assert outcome.status == IsomorphismStatus.DIMENSION_MISMATCH
        assert find_lfr_isomorphism(lfr_m, lfr_m_hat) is None

    def test_feedthrough_mismatch(self, rng: np.random.Generator) -> None:
        M = random_lfr(rng, (1, 2))
        shifted = LfrModel(M.block_sizes, M.A, M.B, M.C, M.D + 1.0)
        assert search_lfr_isomorphism(M, shifted).status == IsomorphismStatus.INFEASIBLE

    def test_different_minimal_models(self, rng: np.random.Generator) -> None:
        outcome = search_lfr_isomorphism(random_lfr(rng, (2, 2)), random_lfr(rng, (2, 2)))
        assert outcome.status == IsomorphismStatus.NOT_EQUIVALENT

    def test_signature_mismatch_raises(self, rng: np.random.Generator, lfr_m: LfrModel) -> None:
        with pytest.raises(DimensionMismatchError):
            search_lfr_isomorphism(lfr_m, random_lfr(rng, (2, 3), p=2))


class TestStructure:
    """LPV-LFR structure and equivalence to the LPV-LFR class."""

    def test_reference_models_are_lpv_lfrs(
        self, lfr_m: LfrModel, lfr_m_alt: LfrModel, lfr_m_hat: LfrModel
    ) -> None:
        assert is_lpv_lfr(lfr_m)
        assert is_lpv_lfr(lfr_m_alt)
        assert is_lpv_lfr(lfr_m_hat)

    def test_report_names_offending_block(
        self, rng: np.random.Generator, lfr_m: LfrModel
    ) -> None:
        report = lpv_structure_report(plant_forbidden_coefficient(rng, lfr_m))
        assert not report.is_lpv_lfr
        assert report.worst_index == (2, 2)
        assert "F[2,2]" in report.note

    def test_single_channel_is_never_lpv_lfr(self) -> None:
        M = LfrModel.from_matrices((1,), A=[[0.0]], B=[[1.0]], C=[[1.0]])
        report = lpv_structure_report(M)
        assert not report.is_lpv_lfr
        assert "d = 1" in report.note
        assert not equivalent_to_lpv_lfr(M)

    def test_generated_lpv_lfr(self, rng: np.random.Generator) -> None:
        assert is_lpv_lfr(random_lpv_lfr(rng, (2, 1, 2)))
        assert not is_lpv_lfr(random_lfr(rng, (2, 1, 2)))

    def test_junk_padding_keeps_equivalence(
        self, rng: np.random.Generator, lfr_m: LfrModel
    ) -> None:
        padded = pad_with_junk(rng, lfr_m)
        assert not is_lpv_lfr(padded)
        assert lfr_formally_equivalent(padded, lfr_m)
        assert equivalent_to_lpv_lfr(padded)
        assert equivalent_to_lpv_lfr_by_minimization(padded)

    def test_table_method_agrees_on_junk(self, rng: np.random.Generator) -> None:
        M = random_lpv_lfr(rng, (1, 1))
        padded = pad_with_junk(rng, M)
        assert equivalent_to_lpv_lfr(padded, word_budget=1 << 20)

    def test_planted_coefficient(self, rng: np.random.Generator, lfr_m: LfrModel) -> None:
        planted = plant_forbidden_coefficient(rng, lfr_m)
        assert not equivalent_to_lpv_lfr(planted)
        assert not equivalent_to_lpv_lfr_by_minimization(planted)

    def test_planted_coefficient_table_method(self, rng: np.random.Generator) -> None:
        planted = plant_forbidden_coefficient(rng, random_lpv_lfr(rng, (1, 1)))
        assert not equivalent_to_lpv_lfr(planted, word_budget=1 << 20)

    def test_large_feedthrough_does_not_hide_forbidden_coefficient(
        self, rng: np.random.Generator, lfr_m: LfrModel
    ) -> None:
        """Forbidden words are judged against their own magnitude, not the table's largest entry."""
        loud = LfrModel(lfr_m.block_sizes, lfr_m.A, lfr_m.B, lfr_m.C, lfr_m.D + 1e12)
        assert equivalent_to_lpv_lfr(loud)

        planted = plant_forbidden_coefficient(rng, lfr_m)
        loud_planted = LfrModel(
            planted.block_sizes, planted.A, planted.B, planted.C, planted.D + 1e12
        )
        assert lfr_series_table(loud_planted, 0).max_entry() >= 1e12
        assert not equivalent_to_lpv_lfr(loud_planted)
        assert not equivalent_to_lpv_lfr(loud_planted, word_budget=1)

    def test_change_of_basis_keeps_table_verdict(self, rng: np.random.Generator) -> None:
        """A block-diagonal change of basis keeps an LPV-LFR in the class."""
        M = transform_lfr(rng, random_lpv_lfr(rng, (1, 2)))
        assert equivalent_to_lpv_lfr(M, word_budget=1 << 20)

    def test_planting_needs_second_channel(self, rng: np.random.Generator) -> None:
        with pytest.raises(StructuralError):
            plant_forbidden_coefficient(rng, random_lfr(rng, (2, 0)))
