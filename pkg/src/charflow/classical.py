"""Independent pre-breaking solver on a plain x-grid.

Method of lines for u_t + f'(u) u_x + P_x = 0 with 4th-order central
differences and the same RK4 core as the characteristic pipeline. Exists
purely as a cross-validation oracle; it must not be trusted anywhere near
breaking and refuses to continue once sup|u_x| crosses a threshold.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BreakingApproached, StepBlowUp
from .flux import FluxModel
from .kernel import source_terms_physical
from .transform import InitialDatum

SUP_UX_LIMIT = 50.0


@dataclass
class ClassicalState:
    t: float
    x_grid: np.ndarray
    u: np.ndarray


@dataclass
class ClassicalTrace:
    state: ClassicalState
    energy_t: np.ndarray
    energy: np.ndarray
    E0: float
    max_drift: float


def _ux4(u, dx):
    # ends are zero-padded: the decay invariant makes the boundary error
    # smaller than the quadrature tolerance
    up = np.concatenate([np.zeros(2), u, np.zeros(2)])
    return (-up[4:] + 8.0 * up[3:-1] - 8.0 * up[1:-3] + up[:-4]) / (12.0 * dx)


def classical_rhs(state: ClassicalState, model: FluxModel) -> np.ndarray:
    dx = float(state.x_grid[1] - state.x_grid[0])
    ux = _ux4(state.u, dx)
    _, Px = source_terms_physical(state.u, ux, dx, model)
    return -model.f1(state.u) * ux - Px


def _rk4(u, dt, dx, model):
    def f(y):
        ux = _ux4(y, dx)
        _, Px = source_terms_physical(y, ux, dx, model)
        return -model.f1(y) * ux - Px

    k1 = f(u)
    k2 = f(u + 0.5 * dt * k1)
    k3 = f(u + 0.5 * dt * k2)
    k4 = f(u + dt * k3)
    return u + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def classical_run(datum: InitialDatum, model: FluxModel, t_end: float,
                  dt: float, n_x: int = 0,
                  sup_ux_limit: float = SUP_UX_LIMIT) -> ClassicalTrace:
    """Integrate to t_end on a uniform grid over the datum's interval.

    Raises BreakingApproached as soon as sup|u_x| crosses sup_ux_limit;
    callers own the responsibility of staying pre-breaking.
    """
    datum.validate()
    n = int(n_x) or datum.x_samples.size
    x = np.linspace(datum.x_samples[0], datum.x_samples[-1], n)
    dx = float(x[1] - x[0])
    u = np.interp(x, datum.x_samples, datum.u_samples)

    ux = _ux4(u, dx)
    E0 = float(np.trapezoid(u * u + ux * ux, dx=dx))
    e_scale = max(abs(E0), np.finfo(float).tiny)
    ts, Es = [], []
    max_drift = 0.0
    t = 0.0
    while t < t_end - 1e-12 * max(1.0, t_end):
        sup = float(np.abs(ux).max())
        if sup > sup_ux_limit:
            raise BreakingApproached(t, sup)
        h = min(dt, t_end - t)
        u = _rk4(u, h, dx, model)
        t += h
        if not np.all(np.isfinite(u)):
            raise StepBlowUp("u", t)
        ux = _ux4(u, dx)
        E = float(np.trapezoid(u * u + ux * ux, dx=dx))
        ts.append(t)
        Es.append(E)
        max_drift = max(max_drift, abs(E - E0) / e_scale)
    return ClassicalTrace(ClassicalState(t, x, u), np.asarray(ts),
                          np.asarray(Es), E0, max_drift)
