"""Time-domain simulation of ALPV models."""

from typing import Any

import numpy as np

from lpvkit_core.errors import DimensionMismatchError
from lpvkit_core.models import AlpvModel, InputSignal, ScheduleSignal, Trajectory, check_signals


def simulate_alpv(
    sigma: AlpvModel,
    u: InputSignal,
    p: ScheduleSignal,
    x0: Any = None,
) -> Trajectory:
    """Run ``x(t+1) = A(p(t)) x(t) + B(p(t)) u(t)``, ``y(t) = C(p(t)) x(t) + D(p(t)) u(t)``.

    With ``x0 = None`` the state starts at zero and y is the input-output
    function of sigma applied to (u, p).
    """
    check_signals(u, p, sigma.n_u, sigma.n_p)
    K = u.horizon
    x = np.zeros((K + 1, sigma.n_x))
    if x0 is not None:
        start = np.asarray(x0, dtype=float).reshape(-1)
        if start.shape != (sigma.n_x,):
            raise DimensionMismatchError(sigma.n_x, start.shape[0], "initial state")
        x[0] = start
    y = np.zeros((K, sigma.n_y))

    A, B = np.stack(sigma.A), np.stack(sigma.B)
    C, D = np.stack(sigma.C), np.stack(sigma.D)
    for t in range(K):
        weights = np.concatenate(([1.0], p.values[t]))
        ut = u.values[t]
        y[t] = np.tensordot(weights, C, axes=1) @ x[t] + np.tensordot(weights, D, axes=1) @ ut
        x[t + 1] = np.tensordot(weights, A, axes=1) @ x[t] + np.tensordot(weights, B, axes=1) @ ut
    return Trajectory(x, y)
