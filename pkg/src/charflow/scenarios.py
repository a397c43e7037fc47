"""Named initial data with closed-form profiles and slopes.

Scenarios evaluate both the profile and its exact derivative; the
characteristic transform is sensitive to slope noise (w = 2 arctan u_x),
so finite differences are reserved for file-loaded data only.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dfield
from typing import Callable, Sequence

import numpy as np

from .transform import InitialDatum


@dataclass(frozen=True)
class Scenario:
    name: str
    u: Callable
    ux: Callable
    L: float
    kinks: Sequence[float] = dfield(default_factory=tuple)
    params: dict = dfield(default_factory=dict)


def zero(L: float = 30.0) -> Scenario:
    return Scenario("zero", lambda x: np.zeros_like(np.asarray(x, dtype=float)),
                    lambda x: np.zeros_like(np.asarray(x, dtype=float)), L)


def peakon(c: float = 1.0, x0: float = 0.0, L: float = 30.0) -> Scenario:
    """u = c exp(-|x - x0|): the peaked traveling wave, slope jump at the crest.

    The slope sample exactly at the crest is the average of the one-sided
    limits, i.e. 0 (sign(0) = 0 does this for free).
    """
    c, x0 = float(c), float(x0)

    def u(x):
        return c * np.exp(-np.abs(x - x0))

    def ux(x):
        return -np.sign(x - x0) * c * np.exp(-np.abs(x - x0))

    return Scenario("peakon", u, ux, L, kinks=(x0,), params={"c": c, "x0": x0})


def antipeakon_pair(c: float = 1.0, a: float = 5.0, L: float = 30.0) -> Scenario:
    """c (exp(-|x+a|) - exp(-|x-a|)): odd pair heading for a collision at x=0."""
    c, a = float(c), float(a)

    def u(x):
        return c * (np.exp(-np.abs(x + a)) - np.exp(-np.abs(x - a)))

    def ux(x):
        return c * (-np.sign(x + a) * np.exp(-np.abs(x + a))
                    + np.sign(x - a) * np.exp(-np.abs(x - a)))

    return Scenario("antipeakon_pair", u, ux, L, kinks=(-a, a), params={"c": c, "a": a})


def gaussian(A: float = 1.0, s: float = 1.0, L: float = 30.0) -> Scenario:
    A, s = float(A), float(s)

    def u(x):
        return A * np.exp(-((x / s) ** 2))

    def ux(x):
        return A * np.exp(-((x / s) ** 2)) * (-2.0 * x / s ** 2)

    return Scenario("gaussian", u, ux, L, params={"A": A, "s": s})


def custom_file(path: str, L: float = None) -> InitialDatum:
    """Two-column (x, u) text file with header '# charflow-initial v1'.

    The slope is recovered by 4th-order central differences since no closed
    form is available.
    """
    from .outputs import read_initial_file

    x, u = read_initial_file(path)
    ux = _fd4(u, x)
    return InitialDatum(x_samples=x, u_samples=u, ux_samples=ux)


def _fd4(u, x):
    # 4th-order interior stencil; ends fall back to one-sided 2nd order,
    # which the decay invariant makes irrelevant
    dx = x[1] - x[0]
    ux = np.empty_like(u)
    ux[2:-2] = (-u[4:] + 8.0 * u[3:-1] - 8.0 * u[1:-3] + u[:-4]) / (12.0 * dx)
    ux[0] = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * dx)
    ux[1] = (u[2] - u[0]) / (2.0 * dx)
    ux[-2] = (u[-1] - u[-3]) / (2.0 * dx)
    ux[-1] = (3.0 * u[-1] - 4.0 * u[-2] + u[-3]) / (2.0 * dx)
    return ux


_BUILDERS = {
    "zero": zero,
    "peakon": peakon,
    "antipeakon_pair": antipeakon_pair,
    "gaussian": gaussian,
}


def make_scenario(name: str, **params) -> Scenario:
    if name == "custom_file":
        raise ValueError("custom_file yields an InitialDatum directly; use custom_file(path)")
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown scenario '{name}'") from None
    return builder(**params)


def sample_datum(scn: Scenario, n_x: int = 24001) -> InitialDatum:
    """Sample a scenario onto [-L, L] with kink locations inserted as exact nodes."""
    x = np.linspace(-scn.L, scn.L, int(n_x))
    if scn.kinks:
        x = np.union1d(x, np.asarray(scn.kinks, dtype=float))
    return InitialDatum(
        x_samples=x,
        u_samples=np.asarray(scn.u(x), dtype=float),
        ux_samples=np.asarray(scn.ux(x), dtype=float),
        kinks_x=tuple(scn.kinks),
    )
