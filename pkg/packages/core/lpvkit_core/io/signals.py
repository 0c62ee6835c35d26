"""Whitespace-separated numeric tables, one time step per row."""

import io
import warnings
from pathlib import Path

import numpy as np

from lpvkit_core.errors import ModelFileError
from lpvkit_core.numerics import Matrix


def read_table(path: Path | str, width: int | None = None) -> Matrix:
    """Read a signal table; ``#`` starts a comment.

    Raises:
        ModelFileError: If the file is unreadable, ragged, non-numeric or of the wrong width.
    """
    path = Path(path)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            X = np.loadtxt(path, ndmin=2, comments="#", dtype=float)
    except OSError as e:
        raise ModelFileError(path, f"cannot read file: {e.strerror or e}") from e
    except ValueError as e:
        raise ModelFileError(path, str(e)) from e
    if not np.all(np.isfinite(X)):
        raise ModelFileError(path, "table contains non-finite entries")
    if width is not None and X.size and X.shape[1] != width:
        raise ModelFileError(path, f"table has {X.shape[1]} columns, expected {width}")
    return X


def format_table(values: Matrix, time_column: bool = True) -> str:
    """Render rows as ``t v1 v2 ...`` with full-precision floats."""
    out = io.StringIO()
    for t, row in enumerate(np.asarray(values, dtype=float)):
        cells = [repr(float(v)) for v in row]
        if time_column:
            cells.insert(0, str(t))
        out.write(" ".join(cells) + "\n")
    return out.getvalue()


def write_table(values: Matrix, path: Path | str) -> Path:
    path = Path(path)
    path.write_text(format_table(values, time_column=False), encoding="utf-8")
    return path
