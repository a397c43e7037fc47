"""Differential identities, breaking-set statistics, energy ledger."""
import numpy as np
import pytest

from charflow import (CharState, RunConfig, Tolerances, build_energy_report,
                      builtin_model, identity_suite, make_scenario, peakon,
                      run, theta_sampler)
from charflow.stepping import initial_state

CH = builtin_model("camassa_holm")


def test_identity_residuals_second_order_at_rest():
    # u_Z, P_Z, x_Z identities on the peakon datum: kink cells are excluded
    # by the jump mask, the rest must refine at second order
    res = {}
    for n in (2048, 4096):
        st = initial_state(RunConfig(model=CH, scenario=peakon(), n_z=n,
                                     t_end=1.0))
        res[n] = identity_suite(st, CH)
    for key in ("uz", "pz", "xz"):
        ratio = res[2048][key] / res[4096][key]
        assert 3.2 <= ratio <= 4.8, f"{key} refined by {ratio}"


def test_masked_fraction_smooth_vs_breaking():
    gauss = make_scenario("gaussian", A=1.0, s=1.0, L=30.0)
    st = initial_state(RunConfig(model=CH, scenario=gauss, n_z=1024, t_end=1.0))
    assert identity_suite(st, CH)["masked_fraction"] == 0.0

    pair = make_scenario("antipeakon_pair", c=1.0, a=5.0, L=30.0)
    tr = run(RunConfig(model=CH, scenario=pair, n_z=4096, t_end=5.75,
                       snapshot_times=(5.75,),
                       tolerances=Tolerances(energy_drift_tol=10.0)))
    out = identity_suite(tr.snapshots[-1], CH)
    assert out["masked_fraction"] > 0.0


def test_identity_suite_rejects_fully_masked_state():
    n = 64
    st = CharState(0.0, 0.1 * np.arange(n), np.zeros(n),
                   np.full(n, np.pi), np.ones(n), np.zeros(n))
    with pytest.raises(ValueError):
        identity_suite(st, CH)


def test_theta_fraction_null_in_time():
    pair = make_scenario("antipeakon_pair", c=1.0, a=5.0, L=30.0)
    tr = run(RunConfig(model=CH, scenario=pair, n_z=512, t_end=7.0,
                       tolerances=Tolerances(energy_drift_tol=10.0)))
    th = theta_sampler(tr)
    assert 0.0 < th <= 0.05

    gauss = make_scenario("gaussian", A=1.0, s=1.0, L=30.0)
    tr2 = run(RunConfig(model=CH, scenario=gauss, n_z=256, t_end=0.5,
                        tolerances=Tolerances(energy_drift_tol=1e-3)))
    assert theta_sampler(tr2) == 0.0


def test_energy_report_shape_and_values():
    gauss = make_scenario("gaussian", A=1.0, s=1.0, L=30.0)
    tr = run(RunConfig(model=CH, scenario=gauss, n_z=512, t_end=0.5,
                       snapshot_times=(0.0, 0.25, 0.5),
                       tolerances=Tolerances(energy_drift_tol=1e-3)))
    rep = build_energy_report(tr)
    assert rep.E0 == tr.E0
    assert len(rep.series) == 3
    assert rep.theta_fraction == 0.0
    assert rep.max_drift == tr.max_drift
    for T, ec, ep, drift in rep.series:
        assert abs(ec - tr.E0) <= 1e-3 * tr.E0
        assert abs(ep - ec) <= 1e-2 * tr.E0
        assert drift <= 1e-3
