"""lpvkit-core: realization theory for affine LPV models and their LFRs."""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("lpvkit-core")
except PackageNotFoundError:
    __version__ = "0.1.0"

# Lazy imports keep `import lpvkit_core` cheap for the CLI
__all__ = [
    "AlpvModel",
    "KitPaths",
    "KitSettings",
    "LfrModel",
    "RankTolerance",
    "__version__",
    "alpv_io_equivalent",
    "find_alpv_isomorphism",
    "find_lfr_isomorphism",
    "is_lpv_lfr",
    "is_minimal_alpv",
    "is_minimal_lfr",
    "lfr_formally_equivalent",
    "lfr_to_alpv",
    "lpv_to_lfr",
    "lpv_to_lfr_mr",
    "minimize_alpv",
    "minimize_lfr",
]


def __getattr__(name: str) -> object:
    """Lazy import modules."""
    if name in ("AlpvModel", "LfrModel"):
        from lpvkit_core import models

        return getattr(models, name)

    if name == "RankTolerance":
        from lpvkit_core.numerics import RankTolerance

        return RankTolerance

    if name in ("alpv_io_equivalent", "find_alpv_isomorphism", "is_minimal_alpv", "minimize_alpv"):
        from lpvkit_core import alpv

        return getattr(alpv, name)

    if name in (
        "find_lfr_isomorphism",
        "is_lpv_lfr",
        "is_minimal_lfr",
        "lfr_formally_equivalent",
        "minimize_lfr",
    ):
        from lpvkit_core import lfr

        return getattr(lfr, name)

    if name in ("lfr_to_alpv", "lpv_to_lfr", "lpv_to_lfr_mr"):
        from lpvkit_core import transform

        return getattr(transform, name)

    if name == "KitPaths":
        from lpvkit_core.paths import KitPaths

        return KitPaths

    if name == "KitSettings":
        from lpvkit_core.config import KitSettings

        return KitSettings

    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
