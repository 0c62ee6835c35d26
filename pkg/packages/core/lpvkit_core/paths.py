"""Centralized path management for lpvkit.

Resolves where configuration and run logs live, with XDG compliance and
environment variable overrides.
"""

import os
from pathlib import Path


class KitPaths:
    """Centralized path resolver for lpvkit storage.

    Path resolution priority:
    1. LPVKIT_DATA_DIR env var (explicit override)
    2. XDG_DATA_HOME/lpvkit (Linux/freedesktop compliance)
    3. ~/.lpvkit (cross-platform default)
    """

    _instance: "KitPaths | None" = None

    def __init__(self, base_dir: Path | None = None) -> None:
        """Initialize paths.

        Args:
            base_dir: Override base directory (for testing)
        """
        self._base_dir = base_dir or self._resolve_base_dir()

    @classmethod
    def get(cls) -> "KitPaths":
        """Get singleton instance."""
        if cls._instance is None:
            cls._instance = cls()
        return cls._instance

    @classmethod
    def reset(cls) -> None:
        """Reset singleton (for testing)."""
        cls._instance = None

    @staticmethod
    def _resolve_base_dir() -> Path:
        if env_dir := os.environ.get("LPVKIT_DATA_DIR"):
            return Path(env_dir)

        if xdg_data := os.environ.get("XDG_DATA_HOME"):
            return Path(xdg_data) / "lpvkit"

        return Path.home() / ".lpvkit"

    @property
    def base(self) -> Path:
        """Base lpvkit data directory."""
        return self._base_dir

    @property
    def logs(self) -> Path:
        """Run log directory."""
        return self._base_dir / "logs"

    @property
    def config(self) -> Path:
        """Main configuration file path (~/.lpvkit/config.toml)."""
        return self._base_dir / "config.toml"

    def get_log_path(self, run_id: str) -> Path:
        """Get path for a run log file.

        Args:
            run_id: Run identifier

        Returns:
            Path to log JSONL file
        """
        return self.logs / f"run_{run_id}.jsonl"
