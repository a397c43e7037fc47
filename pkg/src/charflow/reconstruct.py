"""Back to physical space: u(t, x) from the characteristic state.

x(T, .) is non-decreasing; where it is locally constant (a flat segment,
cos(w/2) = 0) many labels share one physical point and u is constant across
them, so the left label's value is THE value. The slope u_x = tan(w/2) exists
only away from breaking and is masked elsewhere.

Discretely, x can dip by a little where the continuum has x_Z = 0: slope-kink
label nodes carry averaged samples and overshoot their branch neighbors near
and after a collision. Those inversions are isolated, shrink under
refinement, and are removed symmetrically (both endpoints of an inverted
cell are dropped, so mirror-symmetric states reconstruct mirror-symmetric
fields). Only a structural failure, a dip deeper than FOLD_FRAC of the
covered extent, raises NonMonotoneX.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonMonotoneX
from .system import energy_density
from .transform import CharState

FLAT_REL = 1e-14   # a cell is flat when its x-width < FLAT_REL * (x-range)
FOLD_FRAC = 0.05   # inversions dipping deeper than this fraction are a bug
_FOLD_PASSES = 4


def _monotone_survivors(x, flat_abs):
    """Indices of a strictly increasing subsequence of x.

    Inverted cells (width < -flat_abs) lose both endpoints, a few passes
    deep; the survivors then shed flat cells, keeping each segment's left
    label.
    """
    idx = np.arange(x.size)
    for _ in range(_FOLD_PASSES):
        bad = np.nonzero(np.diff(x[idx]) < -flat_abs)[0]
        if bad.size == 0:
            break
        dead = np.zeros(idx.size, dtype=bool)
        dead[bad] = True
        dead[bad + 1] = True
        if dead.all():
            break
        idx = idx[~dead]
    xs = x[idx]
    if np.any(np.diff(xs) < -flat_abs):
        raise NonMonotoneX("x inversions persist after fold removal")
    keep = np.concatenate([[True], np.diff(xs) > flat_abs])
    return idx[keep]


@dataclass
class PhysicalField:
    t: float
    x_grid: np.ndarray
    u: np.ndarray
    ux: np.ndarray            # +-inf sentinel where masked
    mask: np.ndarray          # True where ux is meaningful
    energy: float = 0.0
    energy_complete: bool = True


def to_physical(state: CharState, x_grid, eps_cos: float = 1e-6) -> PhysicalField:
    """Sample the physical field on x_grid.

    Linear interpolation in x between non-flat labels; flat segments
    contribute their left label. Targets outside the covered interval take
    the end values (both are below decay tolerance by construction).
    """
    x_grid = np.asarray(x_grid, dtype=float)
    x, u, w = state.x, state.u, state.w
    xrange = float(x[-1] - x[0])
    if xrange <= 0:
        raise NonMonotoneX("state covers no physical extent")
    depth = float((np.maximum.accumulate(x) - x).max())
    if depth > FOLD_FRAC * xrange:
        raise NonMonotoneX(f"x dips {depth:.3e} below its running max "
                           f"(> {FOLD_FRAC:g} of extent {xrange:.3e})")

    keep = _monotone_survivors(x, FLAT_REL * xrange)
    xc = x[keep]
    uc = u[keep]
    cosw = np.cos(0.5 * w[keep])
    valid_c = np.abs(cosw) > eps_cos
    uxc = np.where(valid_c, np.tan(0.5 * w[keep]), 0.0)

    u_t = np.interp(x_grid, xc, uc)
    ux_t = np.interp(x_grid, xc, uxc)

    # a target is trustworthy only when both bracketing labels are
    j = np.clip(np.searchsorted(xc, x_grid), 1, xc.size - 1)
    mask = valid_c[j - 1] & valid_c[j]
    sentinel = np.copysign(np.inf, np.interp(x_grid, xc, np.sin(state.w[keep])))
    ux_t = np.where(mask, ux_t, sentinel)

    fld = PhysicalField(t=state.T, x_grid=x_grid, u=u_t, ux=ux_t, mask=mask)
    fld.energy = energy_physical(fld)
    fld.energy_complete = (np.count_nonzero(~mask) / mask.size) < 0.01
    return fld


def energy_physical(field: PhysicalField) -> float:
    """int (u^2 + ux^2) dx over cells whose both endpoints carry a valid slope.

    Cells touching breaking are dropped, so at a breaking instant this is a
    lower bound: the concentrated part of the energy is invisible here.
    """
    u, ux, m, x = field.u, field.ux, field.mask, field.x_grid
    cell_ok = m[:-1] & m[1:]
    integ = np.where(m, u * u + np.where(m, ux, 0.0) ** 2, 0.0)
    dx = np.diff(x)
    return float(np.sum(0.5 * dx * (integ[:-1] + integ[1:]) * cell_ok))


def energy_char(state: CharState) -> float:
    """The conserved energy in label space, int (u^2 cos^2(w/2) + sin^2(w/2)) v dZ."""
    return float(np.trapezoid(energy_density(state.u, state.w, state.v),
                              dx=state.dz))


def energy_physical_from_state(state: CharState, eps_cos: float = 1e-6) -> float:
    """int (u^2 + ux^2) dx evaluated in label parametrization.

    Change of variables turns the (possibly diverging) integrand into the
    bounded density (u^2 cos^2(w/2) + sin^2(w/2)) v; restricting to cells
    away from breaking (|cos(w/2)| > eps_cos at both ends) is exactly
    restricting the x-integral to where ux exists. Away from breaking this
    equals the conserved energy; at a breaking instant it is strictly
    smaller (the concentrated part lives on the dropped cells).
    """
    I = energy_density(state.u, state.w, state.v)
    ok = np.abs(np.cos(0.5 * state.w)) > eps_cos
    cell_ok = ok[:-1] & ok[1:]
    return float(np.sum(0.5 * state.dz * (I[:-1] + I[1:]) * cell_ok))


def holder_check(field: PhysicalField, E0: float) -> float:
    """Worst |u(x) - u(y)| / (sqrt(E0) sqrt(|x - y|)) over dyadic separations.

    The continuum bound is 1; the discrete check allows 1 + O(dZ).
    """
    u, x = field.u, field.x_grid
    dx = float(x[1] - x[0])
    if E0 <= 0:
        return 0.0 if np.ptp(u) == 0.0 else np.inf
    worst = 0.0
    d = 1
    while d < u.size:
        num = float(np.abs(u[d:] - u[:-d]).max())
        worst = max(worst, num / np.sqrt(E0 * d * dx))
        d *= 2
    return worst
