"""Machine-checkable consequences of the theory, attached to runs.

Everything here is post-processing: differential identities the state must
satisfy, the energy ledger in both coordinate systems, and the measure of
the breaking set over time.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .flux import FluxModel
from .kernel import source_terms
from .reconstruct import energy_char, energy_physical_from_state
from .stepping import RunTrace
from .transform import CharState

W_JUMP_LIMIT = 0.5  # rad across a centered stencil; flags O(1/dZ) gradients


def identity_suite(state: CharState, model: FluxModel,
                   eps_cos: float = 1e-6,
                   w_jump_limit: float = W_JUMP_LIMIT,
                   exclude=None) -> dict:
    """Max-norm residuals of the three differential identities.

    Checks, with centered differences on interior nodes:
      u_Z = (1/2) v sin w
      P_Z = v P_x cos^2(w/2)
      x_Z = v cos^2(w/2)
    Cells are excluded where the state is not differentiable in Z: breaking
    cells (cos^2(w/2) < eps_cos) and cells where w or log v jumps across the
    stencil (slope kinks carry genuine discontinuities in w and v; the
    identities hold one-sided there and a centered difference does not
    estimate them). The same threshold applies to both fields: w in radians,
    v through its log, both dimensionless.
    """
    u, w, v = state.u, state.w, state.v
    dz = state.dz
    n = u.size
    c2 = np.cos(0.5 * w) ** 2
    ker = source_terms(state, model)
    P = ker.P

    i = np.arange(1, n - 1)
    d = lambda a: (a[2:] - a[:-2]) / (2.0 * dz)
    r_uz = np.abs(d(u) - 0.5 * v[i] * np.sin(w[i]))
    r_pz = np.abs(d(P) - v[i] * ker.Px[i] * c2[i])
    r_xz = np.abs(d(state.x) - v[i] * c2[i])

    breaking = (c2[:-2] < eps_cos) | (c2[1:-1] < eps_cos) | (c2[2:] < eps_cos)
    lv = np.log(np.maximum(v, np.finfo(float).tiny))
    jump = (np.abs(w[2:] - w[:-2]) > w_jump_limit) \
        | (np.abs(lv[2:] - lv[:-2]) > w_jump_limit)
    drop = breaking | jump
    if exclude is not None:
        ex = np.zeros(n, dtype=bool)
        ex[np.asarray(exclude, dtype=int)] = True
        drop |= ex[1:-1]
    keep = ~drop
    if not np.any(keep):
        raise ValueError("identity suite: every interior cell is masked")

    return {
        "uz": float(r_uz[keep].max()),
        "pz": float(r_pz[keep].max()),
        "xz": float(r_xz[keep].max()),
        "masked_fraction": float(np.count_nonzero(drop) / drop.size),
    }


def theta_sampler(trace: RunTrace, min_cells: int = 10) -> float:
    """Fraction of steps whose breaking set exceeds min_cells cells.

    The theory says the set of times with a positive-measure breaking set is
    null; this is its grid-level rendering (cells classified at run time with
    the run's eps_cos).
    """
    counts = trace.breaking_count_series
    if counts.size == 0:
        return 0.0
    return float(np.count_nonzero(counts > min_cells) / counts.size)


@dataclass
class EnergyReport:
    E0: float
    series: list              # (T, E_char, E_phys, drift_rel) at snapshot times
    max_drift: float          # over every step of the run
    theta_fraction: float


def build_energy_report(trace: RunTrace,
                        eps_cos: float = 1e-6) -> EnergyReport:
    """E in both coordinate systems at snapshot times, plus run-wide extrema.

    The physical-side value is evaluated by change of variables on the label
    grid (bounded integrand), not by quadrature of ux^2 on an x grid; the
    latter loses O(dZ) of slope mass in the cells flanking each slope kink.
    """
    e_scale = max(abs(trace.E0), np.finfo(float).tiny)
    rows = []
    for snap in trace.snapshots:
        ec = energy_char(snap)
        ep = energy_physical_from_state(snap, eps_cos=eps_cos)
        rows.append((snap.T, ec, ep, abs(ec - trace.E0) / e_scale))
    return EnergyReport(
        E0=trace.E0,
        series=rows,
        max_drift=trace.max_drift,
        theta_fraction=theta_sampler(trace),
    )
