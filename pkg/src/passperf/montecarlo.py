"""Independent Monte Carlo estimator for outage probability and average rate.

Every trial's random draws are addressed by (seed, trial index) through a
counter-based generator: one Philox counter tick supplies exactly the four
uniforms a placement consumes, so trial ranges can be recomputed or split
across workers without changing any value. Reductions are performed block
by block in index order, making partitioned runs bitwise identical to a
single sequential run as long as workers are assigned whole blocks.

SINRs are recomputed here from the raw distance expressions on purpose so
the estimator stays independent of the analytic modules it validates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import SystemConfig, derive_constants
from .geometry import sample_noma, sample_wdma

TRIAL_BLOCK = 1 << 14  # reduction granularity; partition only at multiples
_LN2 = math.log(2.0)

SCHEMES = ("wdma", "noma")


@dataclass(frozen=True)
class McSpec:
    """What to simulate: trial count, stream seed, scheme, and user index."""

    trials: int
    seed: int
    scheme: str
    user: int

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials!r}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        if self.scheme not in SCHEMES:
            raise ValueError(f"scheme must be one of {SCHEMES}, got {self.scheme!r}")
        if self.user not in (1, 2):
            raise ValueError(f"user must be 1 or 2, got {self.user!r}")


@dataclass(frozen=True)
class MetricEstimate:
    """A metric value with provenance and, for simulation, its uncertainty."""

    value: float
    std_error: float
    trials: int
    provenance: str  # "analytic" | "asymptotic" | "monte-carlo"

    def __post_init__(self):
        if self.std_error < 0.0:
            raise ValueError(f"std_error must be >= 0, got {self.std_error!r}")


def _trial_rng(seed: int, start: int) -> np.random.Generator:
    bit_gen = np.random.Philox(key=seed)
    bit_gen.advance(start)  # one counter tick == one trial's four uniforms
    return np.random.Generator(bit_gen)


def sinr_trials(
    scheme: str,
    user: int,
    cfg: SystemConfig,
    power_w: float,
    seed: int,
    start: int,
    count: int,
) -> np.ndarray:
    """Instantaneous SINRs of trials [start, start + count).

    Deterministic in (seed, trial index): any contiguous range reproduces
    the same per-trial values as a slice of a longer run.
    """
    if power_w <= 0.0:
        raise ValueError(f"power_w must be > 0, got {power_w!r}")
    dc = derive_constants(cfg)
    centre = 0.5 * cfg.region_x_m
    h_sq = cfg.pa_height_m**2
    rng = _trial_rng(seed, start)

    if scheme == "wdma":
        p = sample_wdma(cfg, rng, size=count)
        if user == 1:
            x_own, y_own, y_other, sigma2 = p.x_ue1, p.y_ue1, p.y_ue2, dc.noise_w_ue1
        else:
            x_own, y_own, y_other, sigma2 = p.x_ue2, p.y_ue2, p.y_ue1, dc.noise_w_ue2
        d_sig_sq = (x_own - centre) ** 2 + h_sq
        d_int_sq = (x_own - centre) ** 2 + (y_own - y_other) ** 2 + h_sq
        signal = 0.5 * power_w * dc.eta_m2 / d_sig_sq
        interference = 0.5 * power_w * dc.eta_m2 / d_int_sq
        return signal / (interference + sigma2)

    if scheme == "noma":
        p = sample_noma(cfg, rng, size=count)
        if user == 1:
            d_sq = (p.x_near - centre) ** 2 + h_sq
            return dc.eta_m2 * cfg.noma_alpha_near * power_w / (dc.noise_w_ue1 * d_sq)
        d_sq = (p.x_far - centre) ** 2 + (p.y_near - p.y_far) ** 2 + h_sq
        return (
            dc.eta_m2
            * cfg.noma_alpha_far
            * power_w
            / (dc.eta_m2 * cfg.noma_alpha_near * power_w + dc.noise_w_ue2 * d_sq)
        )

    raise ValueError(f"scheme must be one of {SCHEMES}, got {scheme!r}")


def _blocks(trials: int):
    for start in range(0, trials, TRIAL_BLOCK):
        yield start, min(TRIAL_BLOCK, trials - start)


def mc_outage(spec: McSpec, cfg: SystemConfig, power_w: float) -> MetricEstimate:
    """Empirical probability that the SINR falls at or below the threshold."""
    gth = cfg.outage_threshold
    hits = 0
    for start, count in _blocks(spec.trials):
        gamma = sinr_trials(spec.scheme, spec.user, cfg, power_w, spec.seed, start, count)
        hits += int(np.count_nonzero(gamma <= gth))
    p_hat = hits / spec.trials
    std_error = math.sqrt(p_hat * (1.0 - p_hat) / spec.trials)
    return MetricEstimate(p_hat, std_error, spec.trials, "monte-carlo")


def mc_rate(spec: McSpec, cfg: SystemConfig, power_w: float) -> MetricEstimate:
    """Sample mean and standard error of log2(1 + SINR)."""
    total = 0.0
    total_sq = 0.0
    for start, count in _blocks(spec.trials):
        gamma = sinr_trials(spec.scheme, spec.user, cfg, power_w, spec.seed, start, count)
        rate = np.log1p(gamma) / _LN2
        total += float(np.sum(rate))
        total_sq += float(np.sum(rate * rate))
    n = spec.trials
    mean = total / n
    if n > 1:
        variance = max(0.0, (total_sq - n * mean**2) / (n - 1))
    else:
        variance = 0.0
    return MetricEstimate(mean, math.sqrt(variance / n), n, "monte-carlo")
