"""Tests for identifiability falsification on parameter samples."""

import numpy as np
import pytest

from lpvkit_core.errors import NotLpvLfrError, SampleError
from lpvkit_core.generators import random_lfr
from lpvkit_core.models import AlpvModel, LfrModel
from lpvkit_core.reference_models import motivating_alpv, scaling_parametrization
from lpvkit_core.transform import (
    ParametrizationSample,
    SampleEntry,
    identifiability_falsify,
    lpv_to_lfr_mr,
)


def _uncompensated(theta: tuple[float, ...]) -> AlpvModel:
    return scaling_parametrization(theta, compensate=False)


def _mr_of_scaling(theta: tuple[float, ...]) -> LfrModel:
    return lpv_to_lfr_mr(scaling_parametrization(theta))


class TestFalsification:
    """Pairwise equivalence over a sample."""

    def test_compensated_scaling_is_not_identifiable(self) -> None:
        sample = ParametrizationSample.from_function(scaling_parametrization, [1.0, 2.0])
        report = identifiability_falsify(sample)
        assert report.kind == "alpv"
        assert report.falsified
        assert report.witnesses == [((1.0,), (2.0,))]
        assert report.verdicts_agree

    def test_uncompensated_scaling_is_not_falsified(self) -> None:
        sample = ParametrizationSample.from_function(_uncompensated, [0.5, 1.0, 2.0, 3.0])
        report = identifiability_falsify(sample)
        assert not report.falsified
        assert len(report.pairs) == 6
        assert report.verdicts_agree

    def test_lfr_sample(self) -> None:
        sample = ParametrizationSample.from_function(_mr_of_scaling, [1.0, -2.0, 4.0])
        report = identifiability_falsify(sample)
        assert report.kind == "lfr"
        assert report.falsified
        assert len(report.witnesses) == 3
        assert all(p.formal is True and p.io is True for p in report.pairs)

    def test_only_some_pairs_equivalent(self) -> None:
        def family(theta: tuple[float, ...]) -> AlpvModel:
            return scaling_parametrization(theta, compensate=abs(theta[0]) < 10)

        report = identifiability_falsify(
            ParametrizationSample.from_function(family, [1.0, 2.0, 20.0])
        )
        assert report.witnesses == [((1.0,), (2.0,))]

    def test_general_lfr_in_sample(self, rng: np.random.Generator) -> None:
        sample = ParametrizationSample(
            (
                SampleEntry((0.0,), random_lfr(rng, (1, 1))),
                SampleEntry((1.0,), random_lfr(rng, (1, 1))),
            )
        )
        with pytest.raises(NotLpvLfrError):
            identifiability_falsify(sample)


class TestSampleValidation:
    """Malformed samples."""

    def test_needs_two_entries(self) -> None:
        with pytest.raises(SampleError, match="at least 2"):
            ParametrizationSample.from_function(scaling_parametrization, [1.0])

    def test_thetas_must_be_distinct(self) -> None:
        with pytest.raises(SampleError, match="distinct"):
            ParametrizationSample.from_function(scaling_parametrization, [1.0, 1.0])

    def test_theta_lengths_must_agree(self) -> None:
        sigma = motivating_alpv()
        with pytest.raises(SampleError, match="same length"):
            ParametrizationSample((SampleEntry((1.0,), sigma), SampleEntry((1.0, 2.0), sigma)))

    def test_kinds_cannot_mix(self) -> None:
        sigma = motivating_alpv()
        with pytest.raises(SampleError, match="mix"):
            ParametrizationSample(
                (SampleEntry((1.0,), sigma), SampleEntry((2.0,), lpv_to_lfr_mr(sigma)))
            )

    def test_signatures_must_agree(self) -> None:
        sigma = motivating_alpv()
        with pytest.raises(SampleError, match="signature"):
            ParametrizationSample((SampleEntry((1.0,), sigma), SampleEntry((2.0,), sigma.lti())))

    def test_vector_parameters(self) -> None:
        sample = ParametrizationSample.from_function(
            lambda theta: scaling_parametrization(theta[0] * theta[1]), [(1.0, 2.0), (2.0, 2.0)]
        )
        assert [e.theta for e in sample.entries] == [(1.0, 2.0), (2.0, 2.0)]
