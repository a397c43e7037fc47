"""Command line front end.

Exit codes: 0 all gates pass, 1 gate failure, 2 config error,
3 pre-breaking violation (classical solver hit incipient breaking).
"""
from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import __version__
from .classical import classical_run
from .config import build_run_config, compare_params, parse_config
from .diagnostics import build_energy_report, theta_sampler
from .errors import (BreakingApproached, CharflowError, ConfigError,
                     EnergyDriftExceeded, StepBlowUp)
from .reconstruct import to_physical
from .scenarios import sample_datum
from .stepping import initial_state, run
from .outputs import (write_energy_csv, write_field_csv, write_report,
                      write_snapshot_csv)


def _say(quiet, *args):
    if not quiet:
        print(*args)


def _gate(lines, name, ok, detail=""):
    lines.append((name, ok, detail))
    return ok


def cmd_simulate(cfg_path, out_dir, quiet=False) -> int:
    cfg = parse_config(cfg_path)
    rc = build_run_config(cfg)
    os.makedirs(out_dir, exist_ok=True)
    try:
        trace = run(rc)
    except EnergyDriftExceeded as e:
        _say(quiet, f"FAIL energy_drift: {e}")
        return 1
    except StepBlowUp as e:
        _say(quiet, f"FAIL finite_state: {e}")
        return 1

    write_energy_csv(os.path.join(out_dir, "energy.csv"), trace)
    for i, snap in enumerate(trace.snapshots):
        write_snapshot_csv(os.path.join(out_dir, f"snapshot_{i:03d}.csv"), snap)
        grid = np.linspace(float(snap.x[0]), float(snap.x[-1]), 4097)
        write_field_csv(os.path.join(out_dir, f"field_{i:03d}.csv"),
                        to_physical(snap, grid, eps_cos=rc.tolerances.eps_cos))

    report = build_energy_report(trace, eps_cos=rc.tolerances.eps_cos)
    gates = []
    _gate(gates, "energy_drift", trace.max_drift <= rc.tolerances.energy_drift_tol,
          f"max {trace.max_drift:.3e} tol {rc.tolerances.energy_drift_tol:.1e}")
    _gate(gates, "v_positive", bool(np.all(trace.min_v_series > 0.0)),
          f"min {trace.min_v_series.min() if trace.min_v_series.size else 1.0:.3e}")
    _gate(gates, "decay_at_ends", trace.decay_ok, "")
    umax_ok = bool(np.all(trace.umax_series ** 2 <= trace.E0 * (1.0 + 1e-6) + 1e-300)) \
        if trace.umax_series.size else True
    _gate(gates, "sup_u_bound", umax_ok, "max u^2 vs E0")

    entries = [
        ("charflow_version", __version__),
        ("model", rc.model.name),
        ("scenario", getattr(rc.scenario, "name", "custom_file")),
        ("n_z", rc.n_z),
        ("dt", trace.dt_used),
        ("t_end", rc.t_end),
        ("E0", trace.E0),
        ("max_drift", trace.max_drift),
        ("theta_fraction", theta_sampler(trace)),
        ("breaking_events", len(trace.breaking_events)),
        ("first_breaking_T", trace.breaking_events[0][0] if trace.breaking_events else ""),
        ("rate_coefficient", trace.rate_coefficient),
        ("snapshots", len(trace.snapshots)),
    ]
    for t, ec, ep, drel in report.series:
        entries.append((f"E_char[T={t:g}]", ec))
        entries.append((f"E_phys[T={t:g}]", ep))
    for name, ok, detail in gates:
        entries.append((f"gate.{name}", "pass" if ok else f"FAIL {detail}"))
    write_report(os.path.join(out_dir, "report.txt"), entries)

    all_ok = all(ok for _, ok, _ in gates)
    for name, ok, detail in gates:
        _say(quiet, f"[{'pass' if ok else 'FAIL'}] {name}" + (f" ({detail})" if detail else ""))
    _say(quiet, f"outputs in {out_dir}")
    return 0 if all_ok else 1


def cmd_compare(cfg_path, out_dir, quiet=False) -> int:
    cfg = parse_config(cfg_path)
    rc = build_run_config(cfg)
    cp = compare_params(cfg)
    os.makedirs(out_dir, exist_ok=True)

    times = sorted({float(t) for t in rc.snapshot_times if 0.0 < t <= cp["t_end"]}
                   | {cp["t_end"]})
    rc.t_end = cp["t_end"]
    rc.snapshot_times = tuple(times)
    trace = run(rc)

    datum = rc.scenario if not hasattr(rc.scenario, "u") else sample_datum(rc.scenario, cp["n_x"])
    rows = []
    worst = 0.0
    for snap in trace.snapshots:
        ct = classical_run(datum, rc.model, snap.T, cp["dt"], n_x=cp["n_x"])
        fld = to_physical(snap, ct.state.x_grid, eps_cos=rc.tolerances.eps_cos)
        diff = float(np.abs(fld.u - ct.state.u).max())
        worst = max(worst, diff)
        rows.append((snap.T, diff))
        _say(quiet, f"t={snap.T:g}: max|u_char - u_classical| = {diff:.3e}")

    entries = [("model", rc.model.name),
               ("scenario", getattr(rc.scenario, "name", "custom_file")),
               ("n_x", cp["n_x"]), ("dt_classical", cp["dt"]),
               ("max_diff_tolerance", cp["max_diff"])]
    entries += [(f"diff[t={t:g}]", d) for t, d in rows]
    entries.append(("worst_diff", worst))
    entries.append(("verdict", "pass" if worst <= cp["max_diff"] else "FAIL"))
    write_report(os.path.join(out_dir, "compare.txt"), entries)
    _say(quiet, f"worst {worst:.3e} vs tolerance {cp['max_diff']:.1e}")
    return 0 if worst <= cp["max_diff"] else 1


def cmd_validate(cfg_path, quiet=False) -> int:
    cfg = parse_config(cfg_path)
    rc = build_run_config(cfg)
    state0 = initial_state(rc)
    state0.validate(rc.tolerances.decay_tol)
    # derivative chain sanity on the configured model
    us = np.linspace(-3, 3, 101)
    h = 1e-4
    for fun, dfun, nm in ((rc.model.f, rc.model.f1, "f"), (rc.model.g, rc.model.g1, "g")):
        err = np.abs((fun(us + h) - fun(us - h)) / (2 * h) - dfun(us)).max()
        if err > 1e-6:
            _say(quiet, f"FAIL model derivative chain at {nm}: {err:.3e}")
            return 1
    _say(quiet, f"config ok: model={rc.model.name}, "
                f"scenario={getattr(rc.scenario, 'name', 'custom_file')}, "
                f"n={state0.n}, dz={state0.dz:.6g}")
    return 0


def cmd_emit_plots(run_dir, quiet=False) -> int:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    edir = os.path.join(run_dir, "energy.csv")
    if not os.path.exists(edir):
        raise ConfigError(f"{run_dir}: no energy.csv (is this a run directory?)")
    data = np.genfromtxt(edir, delimiter=",", names=True)
    fig, ax = plt.subplots(1, 2, figsize=(10, 4))
    ax[0].plot(data["T"], data["E"])
    ax[0].set_xlabel("T")
    ax[0].set_ylabel("E")
    ax[0].set_title("energy")
    ax[1].semilogy(data["T"], np.maximum(data["min_cos2"], 1e-16))
    ax[1].set_xlabel("T")
    ax[1].set_ylabel("min cos^2(w/2)")
    ax[1].set_title("distance to breaking")
    fig.tight_layout()
    fig.savefig(os.path.join(run_dir, "energy.png"), dpi=110)
    plt.close(fig)

    fields = sorted(f for f in os.listdir(run_dir)
                    if f.startswith("field_") and f.endswith(".csv"))
    if fields:
        fig, ax = plt.subplots(figsize=(8, 4.5))
        for name in fields:
            path = os.path.join(run_dir, name)
            with open(path) as fh:
                header = fh.readline().strip()
            t = header.split("t=", 1)[1] if "t=" in header else "?"
            d = np.genfromtxt(path, delimiter=",", names=True, skip_header=1)
            ax.plot(d["x"], d["u"], label=f"t={float(t):g}")
        ax.set_xlabel("x")
        ax.set_ylabel("u")
        ax.legend(fontsize=8)
        fig.tight_layout()
        fig.savefig(os.path.join(run_dir, "fields.png"), dpi=110)
        plt.close(fig)
    _say(quiet, f"plots written to {run_dir}")
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="charflow",
                                 description="conservative wave-breaking continuation")
    ap.add_argument("--config", help="config file path")
    ap.add_argument("--out", default="charflow_run", help="output directory")
    ap.add_argument("--seed", type=int, default=0,
                    help="reserved; all runs are deterministic")
    ap.add_argument("--quiet", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("simulate")
    sub.add_parser("compare")
    sub.add_parser("validate")
    p_plots = sub.add_parser("emit-plots")
    p_plots.add_argument("run_dir", nargs="?", default=None)
    ns = ap.parse_args(argv)

    try:
        if ns.command == "emit-plots":
            return cmd_emit_plots(ns.run_dir or ns.out, quiet=ns.quiet)
        if not ns.config:
            raise ConfigError(f"{ns.command} needs --config")
        if ns.command == "simulate":
            return cmd_simulate(ns.config, ns.out, quiet=ns.quiet)
        if ns.command == "compare":
            return cmd_compare(ns.config, ns.out, quiet=ns.quiet)
        if ns.command == "validate":
            return cmd_validate(ns.config, quiet=ns.quiet)
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return 2
    except BreakingApproached as e:
        print(f"pre-breaking violation: {e}", file=sys.stderr)
        return 3
    except CharflowError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 2


if __name__ == "__main__":
    sys.exit(main())
