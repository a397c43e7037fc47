"""Flux models: the (f, g) pair defining one member of the equation family.

Every built-in model is polynomial in u, so derivatives and antiderivatives
are exact coefficient arithmetic, never finite differences. The evolution
needs f'' pointwise and any numerical noise there feeds straight into the
wave-breaking dynamics.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from numpy.polynomial import polynomial as npoly


@dataclass(frozen=True)
class FluxModel:
    """Immutable equation instance.

    f, f1, f2, f3 are f and its first three derivatives; g, g1 likewise.
    F(u) = int_0^u f, G(u) = int_0^u g, and H(u) = int_0^u (2 g(s) + f''(s) s^2) ds
    is the flux appearing in the energy balance.
    """

    name: str
    f: Callable
    f1: Callable
    f2: Callable
    f3: Callable
    g: Callable
    g1: Callable
    F: Callable
    G: Callable
    H: Callable
    f_coeffs: np.ndarray = field(repr=False, default=None)
    g_coeffs: np.ndarray = field(repr=False, default=None)


def _polyfun(coeffs):
    c = np.asarray(coeffs, dtype=float)

    def ev(u):
        return npoly.polyval(u, c)

    return ev


def _from_coeffs(name, f_coeffs, g_coeffs) -> FluxModel:
    fc = np.asarray(f_coeffs, dtype=float)
    gc = np.asarray(g_coeffs, dtype=float)
    if gc[0] != 0.0:
        raise ValueError(f"flux model '{name}': g(0) must vanish, got {gc[0]!r}")
    f1c = npoly.polyder(fc)
    f2c = npoly.polyder(fc, 2)
    f3c = npoly.polyder(fc, 3)
    g1c = npoly.polyder(gc)
    Fc = npoly.polyint(fc)
    Gc = npoly.polyint(gc)
    # H' = 2 g(u) + f''(u) u^2; the u^2 factor is a coefficient shift by two
    hprime = npoly.polyadd(2.0 * gc, npoly.polymul(f2c, [0.0, 0.0, 1.0]))
    Hc = npoly.polyint(hprime)
    return FluxModel(
        name=name,
        f=_polyfun(fc), f1=_polyfun(f1c), f2=_polyfun(f2c), f3=_polyfun(f3c),
        g=_polyfun(gc), g1=_polyfun(g1c),
        F=_polyfun(Fc), G=_polyfun(Gc), H=_polyfun(Hc),
        f_coeffs=fc, g_coeffs=gc,
    )


def camassa_holm() -> FluxModel:
    """f = u^2/2, g = u^2: the classical shallow-water instance."""
    return _from_coeffs("camassa_holm", [0.0, 0.0, 0.5], [0.0, 0.0, 1.0])


def rod(k: float) -> FluxModel:
    """Hyper-elastic rod family: f = k u^2/2, g = (3-k) u^2/2.

    rod(1) coincides with camassa_holm (identical coefficient arrays, so
    evaluations are bit-for-bit equal).
    """
    k = float(k)
    return _from_coeffs(f"rod(k={k:g})", [0.0, 0.0, 0.5 * k], [0.0, 0.0, 0.5 * (3.0 - k)])


def generalized_rod(k: float, g_coeffs) -> FluxModel:
    """f = k u^2/2 with a caller-supplied polynomial g (zero constant term)."""
    k = float(k)
    gc = np.asarray(g_coeffs, dtype=float)
    if gc.ndim != 1 or gc.size == 0:
        raise ValueError("g_coeffs must be a non-empty 1-d coefficient array")
    return _from_coeffs(f"generalized_rod(k={k:g})", [0.0, 0.0, 0.5 * k], gc)


def builtin_model(name: str, k: float = 1.0, g_coeffs=None) -> FluxModel:
    """Build a named model. Recognized: camassa_holm, rod, generalized_rod."""
    if name == "camassa_holm":
        return camassa_holm()
    if name == "rod":
        return rod(k)
    if name == "generalized_rod":
        if g_coeffs is None:
            raise ValueError("generalized_rod needs g_coeffs")
        return generalized_rod(k, g_coeffs)
    raise ValueError(f"unknown flux model '{name}'")
