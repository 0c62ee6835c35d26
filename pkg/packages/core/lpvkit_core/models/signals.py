"""Finite-horizon signals and simulated trajectories."""

from dataclasses import dataclass
from typing import Any

import numpy as np

from lpvkit_core.errors import DimensionMismatchError, StructuralError
from lpvkit_core.models._arrays import frozen_matrix
from lpvkit_core.numerics import Matrix


def _samples(values: Any, what: str) -> Matrix:
    X = np.asarray(values, dtype=float)
    if X.ndim == 1:
        X = X.reshape(-1, 1)
    return frozen_matrix(X, what)


@dataclass(frozen=True, eq=False)
class InputSignal:
    """``u(0..K-1)``: one row per time step."""

    values: Matrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _samples(self.values, "input signal"))

    @property
    def horizon(self) -> int:
        return self.values.shape[0]

    @property
    def width(self) -> int:
        return self.values.shape[1]

    @classmethod
    def zeros(cls, horizon: int, width: int) -> "InputSignal":
        return cls(np.zeros((horizon, width)))


@dataclass(frozen=True, eq=False)
class ScheduleSignal:
    """``p(0..K-1)``: one row per time step, one column per scheduling coordinate."""

    values: Matrix

    def __post_init__(self) -> None:
        X = np.asarray(self.values, dtype=float)
        if X.ndim == 1 and X.size:
            X = X.reshape(-1, 1)
        object.__setattr__(self, "values", frozen_matrix(X, "schedule signal"))

    @property
    def horizon(self) -> int:
        return self.values.shape[0]

    @property
    def width(self) -> int:
        return self.values.shape[1]

    @classmethod
    def zeros(cls, horizon: int, width: int) -> "ScheduleSignal":
        return cls(np.zeros((horizon, width)))


@dataclass(frozen=True, eq=False)
class Trajectory:
    """States ``x(0..K)`` and outputs ``y(0..K-1)``."""

    x: Matrix
    y: Matrix

    def __post_init__(self) -> None:
        x = frozen_matrix(self.x, "states")
        y = frozen_matrix(self.y, "outputs")
        if x.shape[0] != y.shape[0] + 1:
            raise StructuralError(f"{x.shape[0]} states do not match {y.shape[0]} outputs")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @property
    def horizon(self) -> int:
        return self.y.shape[0]


def check_signals(u: InputSignal, p: ScheduleSignal, n_u: int, n_p: int) -> None:
    """Raise DimensionMismatchError unless u and p fit a model with (n_u, n_p)."""
    if u.horizon != p.horizon:
        raise DimensionMismatchError(u.horizon, p.horizon, "signal horizon")
    if u.width != n_u:
        raise DimensionMismatchError(n_u, u.width, "input width")
    if p.width != n_p:
        raise DimensionMismatchError(n_p, p.width, "schedule width")
