"""Shared fixtures for core tests."""

from collections.abc import Iterator
from pathlib import Path

import numpy as np
import pytest

from lpvkit_core.models import AlpvModel, LfrModel
from lpvkit_core.numerics import RankTolerance
from lpvkit_core.paths import KitPaths
from lpvkit_core.reference_models import (
    motivating_alpv,
    motivating_lfr,
    motivating_lfr_alt,
    rounded_minimal_lfr,
)


@pytest.fixture(autouse=True)
def isolated_data_dir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Iterator[Path]:
    """Point the lpvkit data directory at a temporary path."""
    data_dir = tmp_path / "lpvkit-data"
    monkeypatch.setenv("LPVKIT_DATA_DIR", str(data_dir))
    KitPaths.reset()
    yield data_dir
    KitPaths.reset()


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for random models."""
    return np.random.default_rng(20240611)


@pytest.fixture
def tol() -> RankTolerance:
    return RankTolerance()


@pytest.fixture
def sigma() -> AlpvModel:
    """Two-state ALPV of the motivating example."""
    return motivating_alpv()


@pytest.fixture
def lfr_m() -> LfrModel:
    return motivating_lfr()


@pytest.fixture
def lfr_m_alt() -> LfrModel:
    return motivating_lfr_alt()


@pytest.fixture
def lfr_m_hat() -> LfrModel:
    return rounded_minimal_lfr()


@pytest.fixture
def lti() -> AlpvModel:
    """Minimal single-input single-output LTI model as an ALPV with n_p = 0."""
    return AlpvModel.from_matrices(
        A=[[[0.5, 1.0], [0.0, 0.3]]],
        B=[[[0.0], [1.0]]],
        C=[[[1.0, 0.0]]],
        D=[[[0.25]]],
    )
