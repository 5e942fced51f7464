import math

import pytest

from fermigate.budget import RB87_D1_LINEWIDTH, ExperimentParams, control_rabi, error_budget
from fermigate.model import ChainSpec

TWO_PI = 2 * math.pi


def _params(**kw):
    base = dict(eta=0.01, N=1000, Gamma=TWO_PI * 5.75e6, gamma0=1.0, T_p=100e-9,
                U=TWO_PI * 4e3, tU_ratio_sq=0.01)
    base.update(kw)
    return ExperimentParams(**base)


def test_reference_parameter_set():
    b = error_budget(_params())
    assert b.p1 == 1e-4
    assert b.p2 == pytest.approx(0.1, rel=1e-15)
    assert b.v == pytest.approx(8 * 0.01 * TWO_PI * 4e3)
    assert b.T == pytest.approx(1000 / (2 * b.v))
    assert b.T == pytest.approx(0.2487, abs=1e-4)
    assert b.p3 == pytest.approx(b.T)
    assert b.Omega == pytest.approx(math.sqrt(10 * TWO_PI * 5.75e6 / 100e-9), rel=1e-14)
    assert b.Omega / TWO_PI == pytest.approx(9.566e6, rel=1e-3)
    assert b.bandwidth == pytest.approx(10 * TWO_PI * 5.75e6)
    assert b.order_of_magnitude and not b.eta_flag


def test_default_linewidth_gives_same_order_rabi():
    b = error_budget(_params(Gamma=RB87_D1_LINEWIDTH))
    assert 8e6 <= b.Omega / TWO_PI <= 12e6


def test_rabi_invariant_under_eta_N_Gamma_over_Tp():
    s = 10.0
    a = control_rabi(_params())
    b = control_rabi(_params(eta=0.1, T_p=1e-6))
    c = control_rabi(_params(Gamma=TWO_PI * 5.75e7, T_p=1e-6))
    assert b == pytest.approx(a, rel=1e-14)
    assert c == pytest.approx(a, rel=1e-14)
    assert control_rabi(_params(N=10000)) == pytest.approx(math.sqrt(s) * a, rel=1e-14)


def test_exchange_time_scales_inversely_with_U():
    a = error_budget(_params())
    b = error_budget(_params(U=TWO_PI * 8e3))
    assert b.T == pytest.approx(a.T / 2, rel=1e-14)


def test_decoherence_error_grows_with_N():
    a = error_budget(_params())
    b = error_budget(_params(N=3000))
    assert b.p3 == pytest.approx(3 * a.p3, rel=1e-14)
    assert b.p2 == pytest.approx(a.p2 / 3, rel=1e-14)


def test_large_coupling_is_flagged():
    assert error_budget(_params(eta=2.0)).eta_flag


@pytest.mark.parametrize("field", ["eta", "N", "Gamma", "gamma0", "T_p", "U", "tU_ratio_sq"])
def test_nonpositive_inputs_rejected(field):
    with pytest.raises(ValueError, match=field):
        _params(**{field: 0})


def test_chain_must_match():
    with pytest.raises(ValueError, match="sites"):
        error_budget(_params(), chain=ChainSpec(100))
    error_budget(_params(), chain=ChainSpec(1000))
