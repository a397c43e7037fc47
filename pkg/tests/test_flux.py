"""Flux models: exact polynomial arithmetic and the derivative chain."""
import numpy as np
import pytest

from charflow import builtin_model, camassa_holm, generalized_rod, rod

US = np.linspace(-3.0, 3.0, 101)
H_FD = 1e-4


def test_camassa_holm_values():
    m = camassa_holm()
    assert m.f(2.0) == 2.0
    assert m.f1(2.0) == 2.0
    assert m.f2(2.0) == 1.0
    assert m.f3(2.0) == 0.0
    assert m.g(2.0) == 4.0
    assert m.g1(2.0) == 4.0
    # H' = 2 g + f'' u^2 = 3 u^2 for CH, so H(u) = u^3
    assert m.H(2.0) == 8.0


def test_camassa_holm_coefficients():
    m = camassa_holm()
    assert np.array_equal(m.f_coeffs, [0.0, 0.0, 0.5])
    assert np.array_equal(m.g_coeffs, [0.0, 0.0, 1.0])


def test_antiderivatives_vanish_at_zero():
    for m in (camassa_holm(), rod(0.8), generalized_rod(1.1, [0.0, 0.5])):
        assert m.F(0.0) == 0.0
        assert m.G(0.0) == 0.0
        assert m.H(0.0) == 0.0


@pytest.mark.parametrize("make", [camassa_holm, lambda: rod(0.8),
                                  lambda: rod(1.2),
                                  lambda: generalized_rod(0.9, [0.0, 1.0, 0.25])])
def test_derivative_chain(make):
    """Each listed derivative matches a centered difference of its parent."""
    m = make()
    pairs = [(m.f, m.f1), (m.f1, m.f2), (m.f2, m.f3), (m.g, m.g1),
             (m.F, m.f), (m.G, m.g)]
    for fun, dfun in pairs:
        fd = (fun(US + H_FD) - fun(US - H_FD)) / (2.0 * H_FD)
        assert np.abs(fd - dfun(US)).max() < 1e-6


def test_energy_flux_chain():
    # H'(u) = 2 g(u) + f''(u) u^2, checked by centered differences
    for m in (camassa_holm(), rod(0.8), rod(1.2)):
        fd = (m.H(US + H_FD) - m.H(US - H_FD)) / (2.0 * H_FD)
        assert np.abs(fd - (2.0 * m.g(US) + m.f2(US) * US ** 2)).max() < 1e-6


def test_rod_unit_k_is_camassa_holm_bitwise():
    r, ch = rod(1.0), camassa_holm()
    assert np.array_equal(r.f_coeffs, ch.f_coeffs)
    assert np.array_equal(r.g_coeffs, ch.g_coeffs)
    u = np.linspace(-2.0, 2.0, 41)
    for attr in ("f", "f1", "f2", "g", "g1", "H"):
        assert np.array_equal(getattr(r, attr)(u), getattr(ch, attr)(u))


def test_rod_family_g():
    # g = (3 - k) u^2 / 2
    assert rod(0.8).g(2.0) == pytest.approx(0.5 * 2.2 * 4.0, abs=0)
    assert rod(1.2).g(2.0) == pytest.approx(0.5 * 1.8 * 4.0, abs=0)


def test_generalized_rod_rejects_nonzero_g0():
    with pytest.raises(ValueError):
        generalized_rod(1.0, [0.1, 1.0])
    with pytest.raises(ValueError):
        generalized_rod(1.0, [])


def test_builtin_model_dispatch():
    assert builtin_model("camassa_holm").name == "camassa_holm"
    assert builtin_model("rod", k=0.8).name == "rod(k=0.8)"
    m = builtin_model("generalized_rod", k=1.0, g_coeffs=[0.0, 2.0])
    assert m.g(3.0) == 6.0
    with pytest.raises(ValueError):
        builtin_model("generalized_rod")
    with pytest.raises(ValueError):
        builtin_model("kdv")
