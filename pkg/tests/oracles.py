"""Independent slow oracles the fast implementations are tested against.

Everything here favors obviousness over speed: plain double loops, explicit
per-interval quadrature, no shared code with the library internals beyond
plain array inputs.
"""
import numpy as np

GAUSS2_NODES = (-1.0 / np.sqrt(3.0), 1.0 / np.sqrt(3.0))


def direct_source_terms(s, q, dz):
    """O(N^2) rendering of the kernel quadrature.

    Cell j (between nodes j-1 and j) carries trapezoid mass
    dz/2 (q_{j-1} + q_j), damped from the cell's metric midpoint
    m_j = (s_{j-1}+s_j)/2 to the target node. Cells at or left of the
    target accumulate into L, the rest into R; P = (L+R)/2 and
    Px = (R-L)/2.
    """
    s = np.asarray(s, dtype=float)
    q = np.asarray(q, dtype=float)
    n = s.size
    P = np.zeros(n)
    Px = np.zeros(n)
    for i in range(n):
        left = 0.0
        right = 0.0
        for j in range(1, n):
            mass = 0.5 * dz * (q[j - 1] + q[j])
            mid = 0.5 * (s[j - 1] + s[j])
            damped = np.exp(-abs(s[i] - mid)) * mass
            if j <= i:
                left += damped
            else:
                right += damped
        P[i] = 0.5 * (left + right)
        Px[i] = 0.5 * (right - left)
    return P, Px


def gauss_cumulative(y, dz):
    """Cumulative integral of the piecewise-linear interpolant of y.

    Per-interval two-point Gauss quadrature; exact for linear integrands,
    so it must agree with trapezoid accumulation to roundoff.
    """
    y = np.asarray(y, dtype=float)
    out = np.zeros(y.size)
    acc = 0.0
    for j in range(1, y.size):
        mid = 0.5 * (y[j - 1] + y[j])
        slope = (y[j] - y[j - 1]) / dz
        cell = 0.0
        for xi in GAUSS2_NODES:
            cell += 0.5 * dz * (mid + slope * (0.5 * dz * xi))
        out[j] = acc = acc + cell
    return out


def peakon_P(x, c=1.0):
    """Closed-form source term of the unit-speed peaked traveling wave.

    For u = c e^{-|x|} the convolution (1/2)e^{-|.|} * (3c^2/2) e^{-2|.|}
    evaluates to c^2 (e^{-|x|} - e^{-2|x|}/2).
    """
    ax = np.abs(x)
    return c * c * (np.exp(-ax) - 0.5 * np.exp(-2.0 * ax))


def peakon_Px(x, c=1.0):
    ax = np.abs(x)
    return c * c * np.sign(x) * (np.exp(-2.0 * ax) - np.exp(-ax))


def random_states(count, n, seed):
    """Bounded synthetic states (u, w, v, dz) for kernel equivalence tests.

    w deliberately spans several winding periods and v stays well away
    from zero.
    """
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        u = rng.uniform(-1.5, 1.5, n)
        w = rng.uniform(-3.0 * np.pi, 3.0 * np.pi, n)
        v = rng.uniform(0.2, 2.5, n)
        dz = float(rng.uniform(0.005, 0.05))
        out.append((u, w, v, dz))
    return out
