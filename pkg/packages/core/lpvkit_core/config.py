"""Configuration management for lpvkit.

Settings come from (highest priority first) explicit keyword arguments,
``LPVKIT_*`` environment variables, ``~/.lpvkit/config.toml`` and defaults.
"""

import tomllib
from pathlib import Path
from typing import Any

from pydantic import Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from lpvkit_core.numerics.tolerance import RankTolerance


class KitSettings(BaseSettings):
    """Numerical policy shared by the library and the CLI."""

    model_config = SettingsConfigDict(env_prefix="LPVKIT_", extra="ignore")

    # Rank decisions
    rel_tol: float = Field(default=1e-9, gt=0)
    abs_tol: float = Field(default=1e-12, gt=0)

    # Coefficient / residual equality
    match_tol: float = Field(default=1e-8, gt=0)

    # Isomorphism search over affine solution spaces
    isomorphism_draws: int = Field(default=32, ge=1)
    seed: int = 0

    # Largest comparison table before switching to the subspace decider
    series_word_budget: int = Field(default=4096, ge=1)

    def tolerance(self) -> RankTolerance:
        """Build the tolerance object threaded through every decision."""
        return RankTolerance(rel_tol=self.rel_tol, abs_tol=self.abs_tol, match_tol=self.match_tol)

    @classmethod
    def load(cls, config_path: Path | None = None, **overrides: Any) -> "KitSettings":
        """Load settings from a TOML file, then apply overrides.

        Args:
            config_path: Path to config file. If None, uses KitPaths.config.
            **overrides: Values taking precedence over file and environment.

        Returns:
            Loaded settings with defaults for missing values.
        """
        if config_path is None:
            from lpvkit_core.paths import KitPaths

            config_path = KitPaths.get().config

        data: dict[str, Any] = {}
        if config_path.exists():
            try:
                with open(config_path, "rb") as f:
                    raw = tomllib.load(f)
                for section in ("tolerance", "search", "series"):
                    data.update(raw.get(section, {}))
            except (tomllib.TOMLDecodeError, OSError):
                # Malformed file falls back to defaults
                data = {}

        data.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return cls(**data)
        except ValidationError:
            return cls(**{k: v for k, v in overrides.items() if v is not None})

    @classmethod
    def get_default_config_content(cls) -> str:
        """Generate default config.toml content for reference."""
        return """# lpvkit configuration file
# Location: ~/.lpvkit/config.toml

[tolerance]
# Singular values above max(rel_tol * sigma_max, abs_tol) count towards the rank
rel_tol = 1e-9
abs_tol = 1e-12
# Entry-wise tolerance for coefficient and residual comparisons
match_tol = 1e-8

[search]
# Random draws over the affine solution space when looking for an isomorphism
isomorphism_draws = 32
seed = 0

[series]
# Comparison tables larger than this switch to the reachable-subspace decider
series_word_budget = 4096
"""
