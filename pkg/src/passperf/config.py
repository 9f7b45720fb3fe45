"""System configuration, dB/dBm unit conversions, and derived constants."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, fields

SPEED_OF_LIGHT_M_S = 299_792_458.0


class ConfigError(ValueError):
    """A configuration value violates one of its invariants."""


@dataclass(frozen=True)
class SystemConfig:
    """Physical, geometric, and protocol parameters of the two-user downlink.

    The service region is a rectangle of extent ``region_x_m`` along the
    waveguide axis. Each user is dropped uniformly in its own sub-region of
    depth ``region_y_m`` on one side of the axis, offset from the axis by
    ``region_y_offset_m`` (0 gives two adjacent sub-regions; a positive
    offset models dispersed deployments).

    Defaults reproduce the baseline experiment setup: 28 GHz carrier,
    antennas at 3 m height, 10 x 20 m sub-regions, -90 dBm noise, outage
    threshold 5, NOMA power split (0.05, 0.95).
    """

    carrier_freq_hz: float = 28e9
    pa_height_m: float = 3.0
    region_x_m: float = 10.0
    region_y_m: float = 20.0
    region_y_offset_m: float = 0.0
    noise_power_dbm_ue1: float = -90.0
    noise_power_dbm_ue2: float = -90.0
    outage_threshold: float = 5.0
    noma_alpha_near: float = 0.05
    noma_alpha_far: float = 0.95

    def __post_init__(self):
        for name in ("carrier_freq_hz", "pa_height_m", "region_x_m", "region_y_m"):
            if not getattr(self, name) > 0.0:
                raise ConfigError(f"{name} must be > 0, got {getattr(self, name)!r}")
        if not self.region_y_offset_m >= 0.0:
            raise ConfigError(
                f"region_y_offset_m must be >= 0, got {self.region_y_offset_m!r}"
            )
        if not self.outage_threshold > 0.0:
            raise ConfigError(
                f"outage_threshold must be > 0, got {self.outage_threshold!r}"
            )
        a1, a2 = self.noma_alpha_near, self.noma_alpha_far
        if abs(a1 + a2 - 1.0) > 1e-12:
            raise ConfigError(
                f"noma_alpha_near + noma_alpha_far must equal 1, got {a1 + a2!r}"
            )
        if not a1 < a2:
            raise ConfigError(
                f"noma_alpha_near must be < noma_alpha_far, got ({a1!r}, {a2!r})"
            )


@dataclass(frozen=True)
class DerivedConstants:
    """Linearised quantities derived from a :class:`SystemConfig`."""

    eta_m2: float  # free-space path-gain factor, m^2
    noise_w_ue1: float
    noise_w_ue2: float


def db_to_linear(value_db: float) -> float:
    return 10.0 ** (value_db / 10.0)


def linear_to_db(value: float) -> float:
    if value <= 0.0:
        raise ValueError(f"cannot express non-positive ratio {value!r} in dB")
    return 10.0 * math.log10(value)


def dbm_to_watts(value_dbm: float) -> float:
    return 10.0 ** ((value_dbm - 30.0) / 10.0)


def watts_to_dbm(value_w: float) -> float:
    if value_w <= 0.0:
        raise ValueError(f"cannot express non-positive power {value_w!r} in dBm")
    return 10.0 * math.log10(value_w) + 30.0


def derive_constants(cfg: SystemConfig) -> DerivedConstants:
    """Path-gain factor c^2 / (16 pi^2 f^2) and linear noise powers."""
    eta = SPEED_OF_LIGHT_M_S**2 / (16.0 * math.pi**2 * cfg.carrier_freq_hz**2)
    return DerivedConstants(
        eta_m2=eta,
        noise_w_ue1=dbm_to_watts(cfg.noise_power_dbm_ue1),
        noise_w_ue2=dbm_to_watts(cfg.noise_power_dbm_ue2),
    )


def noise_w(cfg: SystemConfig, user: int) -> float:
    """Linear noise power of ``user`` (1 or 2) in watts."""
    if user == 1:
        return dbm_to_watts(cfg.noise_power_dbm_ue1)
    if user == 2:
        return dbm_to_watts(cfg.noise_power_dbm_ue2)
    raise ValueError(f"user must be 1 or 2, got {user!r}")


def snr_db_to_power_w(snr_db: float, noise_w: float) -> float:
    """Transmit power realising a transmit SNR of ``snr_db`` over ``noise_w``."""
    if noise_w <= 0.0:
        raise ValueError(f"noise_w must be > 0, got {noise_w!r}")
    return db_to_linear(snr_db) * noise_w


def power_w_to_snr_db(power_w: float, noise_w: float) -> float:
    if noise_w <= 0.0:
        raise ValueError(f"noise_w must be > 0, got {noise_w!r}")
    return linear_to_db(power_w / noise_w)


def config_from_dict(data: dict) -> SystemConfig:
    """Build a config from a JSON-style mapping; unknown keys are rejected."""
    known = {f.name for f in fields(SystemConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    values = {}
    for key, raw in data.items():
        try:
            values[key] = float(raw)
        except (TypeError, ValueError):
            raise ConfigError(f"{key} must be a number, got {raw!r}") from None
    return SystemConfig(**values)


def load_config(path) -> SystemConfig:
    """Load a :class:`SystemConfig` from a JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ConfigError("config file must contain a JSON object")
    return config_from_dict(data)
