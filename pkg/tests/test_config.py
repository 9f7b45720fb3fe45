import json
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from passperf import (
    ConfigError,
    SystemConfig,
    derive_constants,
    load_config,
    power_w_to_snr_db,
    snr_db_to_power_w,
)
from passperf.config import SPEED_OF_LIGHT_M_S, config_from_dict, dbm_to_watts, noise_w

# Evaluated independently: c^2/(16 pi^2 f^2) at 28 GHz, cross-checked against
# (c/f)^2 / (16 pi^2); the two routes agree to the last float digit.
ETA_28GHZ = 7.259481705540116e-07


def test_eta_default_config():
    dc = derive_constants(SystemConfig())
    assert dc.eta_m2 == pytest.approx(ETA_28GHZ, rel=1e-14)
    wavelength = SPEED_OF_LIGHT_M_S / 28e9
    assert dc.eta_m2 == pytest.approx(wavelength**2 / (16 * math.pi**2), rel=1e-14)


def test_noise_conversion_examples():
    assert dbm_to_watts(-90.0) == pytest.approx(1e-12, rel=1e-14)
    assert dbm_to_watts(0.0) == pytest.approx(1e-3, rel=1e-14)
    dc = derive_constants(SystemConfig())
    assert dc.noise_w_ue1 == pytest.approx(1e-12, rel=1e-14)
    assert dc.noise_w_ue2 == pytest.approx(1e-12, rel=1e-14)


def test_snr_to_power_examples():
    assert snr_db_to_power_w(0.0, 1e-12) == pytest.approx(1e-12, rel=1e-14)
    assert snr_db_to_power_w(30.0, 1e-12) == pytest.approx(1e-9, rel=1e-12)
    assert snr_db_to_power_w(120.0, 1e-12) == pytest.approx(1.0, rel=1e-12)


@given(st.floats(min_value=-50.0, max_value=200.0))
def test_snr_round_trip(snr_db):
    power = snr_db_to_power_w(snr_db, 1e-12)
    assert power_w_to_snr_db(power, 1e-12) == pytest.approx(snr_db, abs=1e-9)


@given(st.floats(min_value=1e9, max_value=300e9))
def test_eta_quadratic_in_frequency(freq):
    eta_f = derive_constants(SystemConfig(carrier_freq_hz=freq)).eta_m2
    eta_2f = derive_constants(SystemConfig(carrier_freq_hz=2 * freq)).eta_m2
    assert eta_2f == pytest.approx(eta_f / 4.0, rel=1e-12)


@pytest.mark.parametrize(
    "kwargs, needle",
    [
        ({"carrier_freq_hz": 0.0}, "carrier_freq_hz"),
        ({"pa_height_m": -1.0}, "pa_height_m"),
        ({"region_x_m": 0.0}, "region_x_m"),
        ({"region_y_m": 0.0}, "region_y_m"),
        ({"region_y_offset_m": -0.1}, "region_y_offset_m"),
        ({"outage_threshold": 0.0}, "outage_threshold"),
        ({"noma_alpha_near": 0.3, "noma_alpha_far": 0.8}, "noma_alpha"),
        ({"noma_alpha_near": 0.6, "noma_alpha_far": 0.4}, "noma_alpha_near"),
    ],
)
def test_invariant_violations_name_the_field(kwargs, needle):
    with pytest.raises(ConfigError, match=needle):
        SystemConfig(**kwargs)


def test_noise_access_per_user():
    cfg = SystemConfig(noise_power_dbm_ue1=-90.0, noise_power_dbm_ue2=-87.0)
    assert noise_w(cfg, 1) == pytest.approx(1e-12)
    assert noise_w(cfg, 2) == pytest.approx(10 ** (-87 / 10 - 3))
    with pytest.raises(ValueError):
        noise_w(cfg, 3)


def test_json_round_trip(tmp_path):
    cfg = SystemConfig(region_y_m=10.0, region_y_offset_m=10.0, outage_threshold=2.0)
    path = tmp_path / "cfg.json"
    path.write_text(
        json.dumps(
            {
                "carrier_freq_hz": cfg.carrier_freq_hz,
                "pa_height_m": cfg.pa_height_m,
                "region_x_m": cfg.region_x_m,
                "region_y_m": cfg.region_y_m,
                "region_y_offset_m": cfg.region_y_offset_m,
                "noise_power_dbm_ue1": cfg.noise_power_dbm_ue1,
                "noise_power_dbm_ue2": cfg.noise_power_dbm_ue2,
                "outage_threshold": cfg.outage_threshold,
                "noma_alpha_near": cfg.noma_alpha_near,
                "noma_alpha_far": cfg.noma_alpha_far,
            }
        )
    )
    assert load_config(path) == cfg


def test_json_defaults_apply_for_missing_keys(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"outage_threshold": 2.0}))
    cfg = load_config(path)
    assert cfg.outage_threshold == 2.0
    assert cfg.carrier_freq_hz == 28e9


def test_json_unknown_keys_rejected():
    with pytest.raises(ConfigError, match="carrier_frequency"):
        config_from_dict({"carrier_frequency": 28e9})


def test_json_non_numeric_rejected():
    with pytest.raises(ConfigError, match="pa_height_m"):
        config_from_dict({"pa_height_m": "tall"})
