"""Flat key = value config files with dotted sections.

Example:

    model.type = camassa_holm
    scenario.name = antipeakon_pair
    scenario.c = 1.0
    scenario.a = 5.0
    grid.n_z = 4096
    time.t_end = 8.6
    time.dt = auto
    time.snapshots = 0, 2.0, 4.0
    tolerances.energy_drift_tol = 1e-6

Diff-friendly, no schema tooling; unknown keys are rejected loudly.
"""
from __future__ import annotations

from .errors import ConfigError
from .flux import builtin_model
from .scenarios import custom_file, make_scenario
from .stepping import RunConfig, Tolerances

_KNOWN = {
    "model.type", "model.k", "model.g_coeffs",
    "scenario.name", "scenario.c", "scenario.a", "scenario.x0",
    "scenario.A", "scenario.s", "scenario.L", "scenario.path",
    "grid.n_z", "grid.n_x",
    "time.t_end", "time.dt", "time.snapshots",
    "tolerances.energy_drift_tol", "tolerances.decay_tol", "tolerances.eps_cos",
    "compare.n_x", "compare.dt", "compare.t_end", "compare.max_diff",
}


def parse_config(path) -> dict:
    """Read a config file into a flat {dotted.key: string} dict."""
    out = {}
    try:
        lines = open(path).read().splitlines()
    except OSError as e:
        raise ConfigError(f"cannot read config: {e}") from None
    for ln, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{ln}: expected 'key = value'")
        key, val = (s.strip() for s in line.split("=", 1))
        if key not in _KNOWN:
            raise ConfigError(f"{path}:{ln}: unknown key '{key}'")
        if key in out:
            raise ConfigError(f"{path}:{ln}: duplicate key '{key}'")
        out[key] = val
    return out


def _num(raw, key, kind=float):
    try:
        return kind(raw)
    except ValueError:
        raise ConfigError(f"{key}: expected a number, got '{raw}'") from None


def _floats(raw, key):
    if not raw.strip():
        return ()
    return tuple(_num(s.strip(), key) for s in raw.split(","))


def build_run_config(cfg: dict) -> RunConfig:
    mtype = cfg.get("model.type", "camassa_holm")
    k = _num(cfg.get("model.k", "1.0"), "model.k")
    g_coeffs = _floats(cfg["model.g_coeffs"], "model.g_coeffs") if "model.g_coeffs" in cfg else None
    try:
        model = builtin_model(mtype, k=k, g_coeffs=g_coeffs)
    except ValueError as e:
        raise ConfigError(str(e)) from None

    name = cfg.get("scenario.name", "zero")
    L = _num(cfg.get("scenario.L", "30.0"), "scenario.L")
    if name == "custom_file":
        if "scenario.path" not in cfg:
            raise ConfigError("scenario.name=custom_file needs scenario.path")
        scenario = custom_file(cfg["scenario.path"])
    else:
        params = {"L": L}
        for short in ("c", "a", "x0", "A", "s"):
            key = f"scenario.{short}"
            if key in cfg:
                params[short] = _num(cfg[key], key)
        try:
            scenario = make_scenario(name, **params)
        except (ValueError, TypeError) as e:
            raise ConfigError(f"scenario '{name}': {e}") from None

    dt_raw = cfg.get("time.dt", "auto").strip()
    dt = "auto" if dt_raw == "auto" else _num(dt_raw, "time.dt")
    if "time.t_end" not in cfg:
        raise ConfigError("time.t_end is required")

    rc = RunConfig(
        model=model,
        scenario=scenario,
        t_end=_num(cfg["time.t_end"], "time.t_end"),
        n_z=_num(cfg.get("grid.n_z", "4096"), "grid.n_z", int),
        dt=dt,
        snapshot_times=_floats(cfg.get("time.snapshots", ""), "time.snapshots"),
        tolerances=Tolerances(
            energy_drift_tol=_num(cfg.get("tolerances.energy_drift_tol", "1e-6"),
                                  "tolerances.energy_drift_tol"),
            decay_tol=_num(cfg.get("tolerances.decay_tol", "1e-10"),
                           "tolerances.decay_tol"),
            eps_cos=_num(cfg.get("tolerances.eps_cos", "1e-6"),
                         "tolerances.eps_cos"),
        ),
        n_x_datum=_num(cfg.get("grid.n_x", "0"), "grid.n_x", int),
    )
    try:
        rc.validate()
    except ValueError as e:
        raise ConfigError(str(e)) from None
    return rc


def compare_params(cfg: dict) -> dict:
    return {
        "n_x": _num(cfg.get("compare.n_x", "2049"), "compare.n_x", int),
        "dt": _num(cfg.get("compare.dt", "2.5e-4"), "compare.dt"),
        "t_end": _num(cfg.get("compare.t_end", cfg.get("time.t_end", "0.5")), "compare.t_end"),
        "max_diff": _num(cfg.get("compare.max_diff", "5e-3"), "compare.max_diff"),
    }
