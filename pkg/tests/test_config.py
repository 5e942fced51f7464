import math

import pytest

from fermigate.config import ConfigError, canonical_config, parse_config


def test_defaults_are_the_headline_gate():
    spec = parse_config({}).gate.run_spec()
    assert spec.chain.N == 100
    assert spec.R.center == 25 and spec.L.center == 75
    assert spec.R.sigma == 10 and spec.R.carrier == pytest.approx(math.pi / 2)
    assert spec.tau == pytest.approx(100 / (4 * 2 * math.pi))


def test_hubbard_block_sets_couplings():
    cfg = parse_config({"gate": {"couplings": {"hubbard": {
        "t_g_hz": 1, "t_s_hz": 2, "U_gg_hz": 80, "U_ss_hz": 120, "U_sg_hz": 100,
    }}}})
    c = cfg.gate.run_spec().couplings
    assert c.J == pytest.approx(2 * math.pi * 0.04)
    assert c.V == pytest.approx(-2 * math.pi / 12)


def test_hubbard_without_exchange_rejected():
    with pytest.raises(ConfigError, match="J must be positive"):
        parse_config({"gate": {"couplings": {"hubbard": {
            "t_g_hz": 0, "t_s_hz": 2, "U_gg_hz": 80, "U_ss_hz": 120, "U_sg_hz": 100,
        }}}})


def test_storage_block_sets_carrier():
    cfg = parse_config({"gate": {"R": {"center_frac": 0.25, "carrier": 0.0,
                                       "storage": {"k_i": 1, "k_c": 1, "theta_c_deg": 60}}}})
    assert cfg.gate.run_spec().R.carrier == pytest.approx(math.pi / 2, abs=1e-12)


def test_time_options():
    cfg = parse_config({"gate": {"tau_J": 3.0, "couplings": {"J_hz": 2.0}}})
    assert cfg.gate.run_spec().tau == pytest.approx(3.0 / (4 * math.pi))
    with pytest.raises(ConfigError, match="at most one"):
        parse_config({"gate": {"tau_J": 3.0, "tau_s": 1.0}})


@pytest.mark.parametrize("data, path", [
    ({"gate": {"chain": {"N": 2}}}, "gate.chain.N"),
    ({"gate": {"tol": 1e-20}}, "gate.tol"),
    ({"experiment": {"eta": -1}}, "experiment.eta"),
    ({"sweep": {"N": [100, 3]}}, "sweep"),
    ({"threads": 0}, "threads"),
    ({"bogus": 1}, "bogus"),
])
def test_errors_name_the_field(data, path):
    with pytest.raises(ConfigError, match=path.replace(".", r"\.")):
        parse_config(data)


def test_physics_errors_surface_as_config_errors():
    # sigma below one site on a short chain
    with pytest.raises(ConfigError, match="width"):
        parse_config({"gate": {"chain": {"N": 8}}})


def test_canonical_config_reparses_to_same_document():
    doc = canonical_config(parse_config({"gate": {"couplings": {"V_hz": 0.25}}}))
    assert doc["derived"]["V_rad_s"] == pytest.approx(0.5 * math.pi)
    assert canonical_config(parse_config(doc)) == doc
