"""Shared fixtures for CLI tests."""

from collections.abc import Callable, Iterator
from pathlib import Path

import numpy as np
import pytest

from lpvkit_cli.cli.entry import main
from lpvkit_core.generators import random_lfr
from lpvkit_core.io import write_model
from lpvkit_core.models import AlpvModel
from lpvkit_core.paths import KitPaths
from lpvkit_core.reference_models import (
    motivating_alpv,
    motivating_lfr,
    motivating_lfr_alt,
    rounded_minimal_lfr,
)


@pytest.fixture(autouse=True)
def isolated_data_dir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Iterator[Path]:
    """Keep config lookups and run logs inside the test's temp dir."""
    data_dir = tmp_path / "lpvkit-data"
    monkeypatch.setenv("LPVKIT_DATA_DIR", str(data_dir))
    for name in ("REL_TOL", "ABS_TOL", "MATCH_TOL", "SEED"):
        monkeypatch.delenv(f"LPVKIT_{name}", raising=False)
    KitPaths.reset()
    yield data_dir
    KitPaths.reset()


@pytest.fixture
def models(tmp_path: Path) -> dict[str, Path]:
    """Reference models written to JSON files."""
    folder = tmp_path / "models"
    lti = AlpvModel.from_matrices(
        A=[[[0.5, 1.0], [0.0, 0.3]]],
        B=[[[0.0], [1.0]]],
        C=[[[1.0, 0.0]]],
        D=[[[0.25]]],
    )
    return {
        "sigma": write_model(motivating_alpv(), folder / "sigma.json"),
        "m": write_model(motivating_lfr(), folder / "m.json"),
        "m_alt": write_model(motivating_lfr_alt(), folder / "m_alt.json"),
        "m_hat": write_model(rounded_minimal_lfr(), folder / "m_hat.json"),
        "lti": write_model(lti, folder / "lti.json"),
        "general": write_model(
            random_lfr(np.random.default_rng(3), (2, 2)), folder / "general.json"
        ),
    }


@pytest.fixture
def run(capsys: pytest.CaptureFixture[str]) -> Callable[..., tuple[int, str, str]]:
    """Invoke the CLI and return ``(exit code, stdout, stderr)``."""

    def invoke(*args: str | Path) -> tuple[int, str, str]:
        code = main([str(a) for a in args])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke
