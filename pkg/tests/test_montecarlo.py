import math

import numpy as np
import pytest

from passperf import (
    McSpec,
    MetricEstimate,
    SystemConfig,
    mc_outage,
    mc_rate,
    sinr_trials,
    snr_db_to_power_w,
)
from passperf.montecarlo import TRIAL_BLOCK

CFG = SystemConfig()
POWER = snr_db_to_power_w(100.0, 1e-12)
LN2 = math.log(2.0)


def test_spec_validation():
    with pytest.raises(ValueError, match="trials"):
        McSpec(0, 1, "wdma", 1)
    with pytest.raises(ValueError, match="seed"):
        McSpec(10, -1, "wdma", 1)
    with pytest.raises(ValueError, match="scheme"):
        McSpec(10, 1, "tdma", 1)
    with pytest.raises(ValueError, match="user"):
        McSpec(10, 1, "noma", 3)
    with pytest.raises(ValueError, match="std_error"):
        MetricEstimate(0.5, -1.0, 10, "monte-carlo")


def test_impossible_outage_event_is_exactly_zero():
    # SINR is strictly positive, so a vanishing threshold is never hit
    cfg = SystemConfig(outage_threshold=1e-300)
    est = mc_outage(McSpec(20_000, 5, "wdma", 1), cfg, POWER)
    assert est.value == 0.0
    assert est.std_error == 0.0


def test_certain_outage_at_vanishing_power():
    est = mc_outage(McSpec(20_000, 5, "wdma", 1), CFG, 1e-300)
    assert est.value == 1.0


def test_rate_vanishes_with_power():
    est = mc_rate(McSpec(20_000, 5, "noma", 1), CFG, 1e-300)
    assert est.value == pytest.approx(0.0, abs=1e-15)


def test_same_seed_is_bitwise_identical():
    a = mc_outage(McSpec(50_000, 123, "noma", 2), CFG, POWER)
    b = mc_outage(McSpec(50_000, 123, "noma", 2), CFG, POWER)
    assert a == b
    c = mc_rate(McSpec(50_000, 123, "wdma", 2), CFG, POWER)
    d = mc_rate(McSpec(50_000, 123, "wdma", 2), CFG, POWER)
    assert c == d


def test_trials_are_addressable_by_index():
    full = sinr_trials("wdma", 1, CFG, POWER, 42, 0, 30_000)
    head = sinr_trials("wdma", 1, CFG, POWER, 42, 0, 10_000)
    tail = sinr_trials("wdma", 1, CFG, POWER, 42, 10_000, 20_000)
    assert np.array_equal(full, np.concatenate([head, tail]))
    middle = sinr_trials("wdma", 1, CFG, POWER, 42, 7_000, 1_000)
    assert np.array_equal(full[7_000:8_000], middle)


def test_partitioned_reduction_matches_sequential():
    # two workers own alternating blocks; partial sums folded in block order
    trials = 100_000
    blocks = [(s, min(TRIAL_BLOCK, trials - s)) for s in range(0, trials, TRIAL_BLOCK)]

    def block_sums(start, count):
        gamma = sinr_trials("wdma", 1, CFG, POWER, 42, start, count)
        r = np.log1p(gamma) / LN2
        return float(np.sum(r)), float(np.sum(r * r))

    worker_even = {i: block_sums(*b) for i, b in enumerate(blocks) if i % 2 == 0}
    worker_odd = {i: block_sums(*b) for i, b in enumerate(blocks) if i % 2 == 1}
    merged = {**worker_odd, **worker_even}
    total = total_sq = 0.0
    for i in range(len(blocks)):
        s, s2 = merged[i]
        total += s
        total_sq += s2
    mean = total / trials
    variance = max(0.0, (total_sq - trials * mean**2) / (trials - 1))
    reference = mc_rate(McSpec(trials, 42, "wdma", 1), CFG, POWER)
    assert mean == reference.value
    assert math.sqrt(variance / trials) == reference.std_error

    counts = 0
    for start, count in blocks:
        gamma = sinr_trials("wdma", 1, CFG, POWER, 42, start, count)
        counts += int(np.count_nonzero(gamma <= CFG.outage_threshold))
    assert counts / trials == mc_outage(McSpec(trials, 42, "wdma", 1), CFG, POWER).value


@pytest.mark.parametrize("power", [1e-300, 1e-12, 1.0, 1e30])
def test_estimates_finite_over_extreme_powers(power):
    for scheme, user in (("wdma", 1), ("wdma", 2), ("noma", 1), ("noma", 2)):
        out = mc_outage(McSpec(5_000, 9, scheme, user), CFG, power)
        rate = mc_rate(McSpec(5_000, 9, scheme, user), CFG, power)
        assert math.isfinite(out.value) and math.isfinite(out.std_error)
        assert math.isfinite(rate.value) and math.isfinite(rate.std_error)
        assert 0.0 <= out.value <= 1.0


def test_std_error_scales_with_trials():
    # doubling the trial count shrinks the standard error by about sqrt(2)
    ratios = []
    for seed in range(10):
        small = mc_rate(McSpec(20_000, seed, "wdma", 1), CFG, POWER)
        large = mc_rate(McSpec(40_000, seed, "wdma", 1), CFG, POWER)
        ratios.append(large.std_error / small.std_error)
    assert np.mean(ratios) == pytest.approx(1.0 / math.sqrt(2.0), rel=0.2)


def test_outage_std_error_is_binomial():
    est = mc_outage(McSpec(50_000, 3, "noma", 2), CFG, POWER)
    assert est.std_error == pytest.approx(
        math.sqrt(est.value * (1 - est.value) / est.trials), rel=1e-12
    )
    assert est.provenance == "monte-carlo"
    assert est.trials == 50_000


def test_noma_mc_respects_ordering_every_trial():
    # the far user's SINR can never exceed the near-geometry bound
    gamma_near = sinr_trials("noma", 1, CFG, POWER, 11, 0, 10_000)
    assert np.all(gamma_near > 0)
    gamma_far = sinr_trials("noma", 2, CFG, POWER, 11, 0, 10_000)
    cap = CFG.noma_alpha_far / CFG.noma_alpha_near
    assert np.all(gamma_far < cap)
