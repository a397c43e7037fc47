"""Peakon-antipeakon collision: energy through the breaking event.

The antisymmetric pair u(0,x) = e^{-|x+a|} - e^{-|x-a|} steepens as the
waves approach, and at the collision time the slope blows down to -infinity
while u itself stays bounded. On the characteristic grid the run continues
smoothly through that instant; in physical variables the energy integral
int (u^2 + ux^2) dx momentarily loses the part concentrated at the collision
point and regains it afterwards.

The breaking set is a single instant in time, so a snapshot only exhibits
the concentration if it is placed exactly there: this script first locates
the instant with a probe run, then re-runs with a snapshot on it and prints
the energy ledger. The "concentrated" column integrates the cells whose
cos(w/2) is within 1e-3 of the breaking value 0.
"""
import numpy as np

from charflow import (RunConfig, Tolerances, builtin_model, energy_char,
                      energy_physical_from_state, make_scenario, run,
                      theta_sampler)

T_BREAK_HINT = 5.73  # c=1, a=5 collision; refined by the probe below
LOOSE = Tolerances(energy_drift_tol=10.0)


def main():
    model = builtin_model("camassa_holm")
    pair = make_scenario("antipeakon_pair", c=1.0, a=5.0, L=30.0)

    probe = run(RunConfig(model=model, scenario=pair, n_z=4096,
                          t_end=1.5 * T_BREAK_HINT, tolerances=LOOSE))
    t_star = float(probe.energy_t[np.argmin(probe.min_cos_series)])
    print(f"deepest breaking at T = {t_star:.4f} "
          f"(min cos^2(w/2) = {probe.min_cos_series.min():.2e})")
    print(f"breaking events recorded: {len(probe.breaking_events)}, "
          f"wide-set step fraction {theta_sampler(probe):.5f}")

    times = tuple(f * t_star for f in (0.25, 0.5, 0.75)) \
        + (t_star,) + tuple(f * t_star for f in (1.2, 1.5))
    tr = run(RunConfig(model=model, scenario=pair, n_z=4096,
                       t_end=1.5 * t_star, snapshot_times=times,
                       tolerances=LOOSE))

    print(f"\nE0 = {tr.E0:.6f}")
    print("  T        E (labels)   E (physical)   concentrated")
    for snap in tr.snapshots:
        ec = energy_char(snap)
        ep = energy_physical_from_state(snap, eps_cos=1e-3)
        mark = "  <- breaking" if snap.T == t_star else ""
        print(f"  {snap.T:7.4f}  {ec:11.6f}  {ep:13.6f}  {ec - ep:12.3e}"
              f"{mark}")
    print()
    print("the concentrated part exists only on the breaking row: there the")
    print("physical integral cannot see the energy carried by the cells at")
    print("cos(w/2) = 0, while the label-space integral keeps it.")
    print(f"label-space drift over the whole run: {tr.max_drift:.3e}")
    print("(the drift is dominated by the collision itself: the state there")
    print("develops structure narrower than any fixed label spacing)")


if __name__ == "__main__":
    main()
