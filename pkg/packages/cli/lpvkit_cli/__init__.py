"""lpvkit-cli: command line front-end for lpvkit."""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("lpvkit-cli")
except PackageNotFoundError:
    __version__ = "0.1.0"

__all__ = ["__version__"]
