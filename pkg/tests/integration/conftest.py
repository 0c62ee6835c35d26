"""Shared fixtures for integration tests."""

from collections.abc import Iterator
from pathlib import Path

import pytest

from lpvkit_core.paths import KitPaths


@pytest.fixture(autouse=True)
def isolated_data_dir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Iterator[Path]:
    """Point the lpvkit data directory at a temporary path."""
    data_dir = tmp_path / "lpvkit-data"
    monkeypatch.setenv("LPVKIT_DATA_DIR", str(data_dir))
    KitPaths.reset()
    yield data_dir
    KitPaths.reset()
