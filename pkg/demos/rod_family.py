"""The rod family rod(k): one knob between dispersive regimes.

f(u) = k u^2/2 and g(u) = (3-k) u^2/2 interpolate a family of rod equations;
k = 1 lands exactly on camassa_holm (same coefficient arrays, same code
path), which this script verifies bitwise on a full run.
"""
import numpy as np

from charflow import RunConfig, Tolerances, builtin_model, make_scenario, run

PAIR = make_scenario("antipeakon_pair", c=1.0, a=5.0, L=30.0)


def collide(model, n_z=8192, t_end=0.5):
    return run(RunConfig(model=model, scenario=PAIR, n_z=n_z, t_end=t_end,
                         snapshot_times=(t_end,),
                         tolerances=Tolerances(energy_drift_tol=1e-4)))


def main():
    print("   k     E0          max drift")
    traces = {}
    for k in (0.8, 1.0, 1.2):
        tr = collide(builtin_model("rod", k=k))
        traces[k] = tr
        print(f"  {k:3.1f}   {tr.E0:.6f}   {tr.max_drift:.3e}")

    ch = collide(builtin_model("camassa_holm"))
    rod1 = traces[1.0]
    same = all(
        np.array_equal(getattr(rod1.final, f), getattr(ch.final, f))
        for f in ("u", "w", "v", "x"))
    print(f"\nrod(k=1) final state identical to camassa_holm: {same}")
    print("(identical coefficient arrays make the arithmetic identical,"
          " not merely close)")


if __name__ == "__main__":
    main()
