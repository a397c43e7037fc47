"""Right-hand side of the semi-linear evolution and the solution-space norm.

The state is read through cos(w/2), sin(w/2), sin(w) only, so the evolution
is invariant under w -> w + 2 pi; w itself is left unwrapped in time.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._scan import cumtrapz_scan, exp_scan
from .flux import FluxModel
from .transform import CharState


@dataclass(frozen=True)
class StateDerivative:
    du: np.ndarray
    dw: np.ndarray
    dv: np.ndarray
    dx: np.ndarray


def _rhs_arrays(u, w, v, dz, model: FluxModel):
    """du, dw, dv, dx as plain arrays; the integrator hot path."""
    c2 = np.cos(0.5 * w) ** 2
    s2 = 1.0 - c2
    gu = model.g(u)
    f2u = model.f2(u)
    s = cumtrapz_scan(v * c2, dz)
    q = (gu * c2 + 0.5 * f2u * s2) * v
    P, Px = exp_scan(s, q, dz)
    du = -Px
    dw = 2.0 * (gu - P) * c2 - f2u * s2
    dv = (gu - P + 0.5 * f2u) * v * np.sin(w)
    dx = model.f1(u)
    return du, dw, dv, dx


def rhs(state: CharState, model: FluxModel) -> StateDerivative:
    du, dw, dv, dx = _rhs_arrays(state.u, state.w, state.v, state.dz, model)
    for name, arr in (("du", du), ("dw", dw), ("dv", dv), ("dx", dx)):
        if not np.all(np.isfinite(arr)):
            raise FloatingPointError(f"rhs produced non-finite {name}")
    return StateDerivative(du=du, dw=dw, dv=dv, dx=dx)


def energy_density(u, w, v):
    """Integrand of the conserved energy: (u^2 cos^2(w/2) + sin^2(w/2)) v."""
    c2 = np.cos(0.5 * w) ** 2
    return (u * u * c2 + (1.0 - c2)) * v


def norm_X(state: CharState, eps: float = 1e-12) -> float:
    """Norm of the solution space: ||u||_H1 + ||w||_L2 + ||w||_Linf + ||v||_Linf.

    The H1 derivative is u_Z / x_Z (centered u_Z, pointwise x_Z = v cos^2(w/2)),
    counted only where x_Z > eps; the H1 integrals carry the x_Z measure
    weight so they are physical-space integrals in disguise.
    """
    u, w, v = state.u, state.w, state.v
    dz = state.dz
    c2 = np.cos(0.5 * w) ** 2
    xz = v * c2
    uz = np.gradient(u, dz)
    valid = xz > eps
    ux2 = np.zeros_like(u)
    ux2[valid] = (uz[valid] / xz[valid]) ** 2
    h1sq = np.trapezoid((u * u + ux2) * xz, dx=dz)
    wl2 = np.sqrt(np.trapezoid(w * w, dx=dz))
    return float(np.sqrt(h1sq) + wl2 + np.abs(w).max() + np.abs(v).max())
