"""Sequential exponential-kernel scans (numba).

The kernel e^{-|s_i - s_j|} factorizes across cells, so the double sum
collapses to one left-to-right and one right-to-left recursion. Each cell
contributes its trapezoid mass damped by e^{-ds/2} (midpoint of the cell in
metric distance); the running accumulator is damped by the full e^{-ds}.
These loops carry a scan dependency and must stay sequential.
"""
import numpy as np
from numba import njit


@njit(cache=True)
def exp_scan(s, q, dz):
    """Return (P, Px) with P = (L+R)/2 and Px = (R-L)/2.

    L_i collects cells j <= i damped by e^{-(s_i - s_j)}; R_i the mirror.
    The self-cell belongs to both sweeps' local mass, which gives P its full
    self-contribution while the two halves cancel in Px (principal value).
    """
    n = s.shape[0]
    L = np.zeros(n)
    R = np.zeros(n)
    for i in range(1, n):
        ds = s[i] - s[i - 1]
        half = np.exp(-0.5 * ds)
        cell = 0.5 * dz * (q[i - 1] + q[i])
        L[i] = L[i - 1] * (half * half) + half * cell
    for i in range(n - 2, -1, -1):
        ds = s[i + 1] - s[i]
        half = np.exp(-0.5 * ds)
        cell = 0.5 * dz * (q[i] + q[i + 1])
        R[i] = R[i + 1] * (half * half) + half * cell
    return 0.5 * (L + R), 0.5 * (R - L)


@njit(cache=True)
def cumtrapz_scan(y, dz):
    """Cumulative trapezoid with s[0] = 0; kept in numba to stay off the heap
    in the per-step hot path."""
    n = y.shape[0]
    s = np.empty(n)
    s[0] = 0.0
    for i in range(1, n):
        s[i] = s[i - 1] + 0.5 * dz * (y[i - 1] + y[i])
    return s
