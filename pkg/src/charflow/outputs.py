"""File formats: CSV series, field snapshots, reports, initial-data files.

Floats are written with repr (shortest round-trip), which makes identical
runs byte-identical.
"""
from __future__ import annotations

import numpy as np

from .errors import ConfigError

FIELD_HEADER = "# charflow-field v1"
INITIAL_HEADER = "# charflow-initial v1"


def _f(x) -> str:
    return repr(float(x))


def write_energy_csv(path, trace):
    with open(path, "w") as fh:
        fh.write("T,E,min_v,min_cos2\n")
        for t, e, mv, mc in zip(trace.energy_t, trace.energy,
                                trace.min_v_series, trace.min_cos_series):
            fh.write(f"{_f(t)},{_f(e)},{_f(mv)},{_f(mc)}\n")


def write_snapshot_csv(path, state):
    with open(path, "w") as fh:
        fh.write("Z,u,w,v,x\n")
        for row in zip(state.Z, state.u, state.w, state.v, state.x):
            fh.write(",".join(_f(c) for c in row) + "\n")


def write_field_csv(path, field):
    with open(path, "w") as fh:
        fh.write(f"{FIELD_HEADER} t={_f(field.t)}\n")
        fh.write("x,u,ux\n")
        for xi, ui, uxi, ok in zip(field.x_grid, field.u, field.ux, field.mask):
            fh.write(f"{_f(xi)},{_f(ui)},{_f(uxi) if ok else ''}\n")


def write_report(path, entries):
    """key=value lines in the given (fixed) order."""
    with open(path, "w") as fh:
        for k, v in entries:
            fh.write(f"{k}={v}\n")


def read_initial_file(path):
    with open(path) as fh:
        first = fh.readline().strip()
        if first != INITIAL_HEADER:
            raise ConfigError(
                f"{path}: expected header '{INITIAL_HEADER}', got '{first}'")
        rows = []
        for ln, line in enumerate(fh, start=2):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.replace(",", " ").split()
            if len(parts) != 2:
                raise ConfigError(f"{path}:{ln}: expected two columns")
            try:
                rows.append((float(parts[0]), float(parts[1])))
            except ValueError:
                raise ConfigError(f"{path}:{ln}: bad number") from None
    if len(rows) < 3:
        raise ConfigError(f"{path}: need at least 3 samples")
    arr = np.asarray(rows, dtype=float)
    return arr[:, 0], arr[:, 1]


def write_initial_file(path, x, u):
    with open(path, "w") as fh:
        fh.write(INITIAL_HEADER + "\n")
        for xi, ui in zip(x, u):
            fh.write(f"{_f(xi)} {_f(ui)}\n")
