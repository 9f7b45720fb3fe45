"""Single-antenna power-domain access: SINRs, outage, rates, high-SNR limits.

One antenna, pinned above the near user, serves both users through
superposition coding. The near user cancels the far user's signal before
decoding; the far user decodes under the near user's interference, which
caps its SINR at alpha_far / alpha_near.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import SystemConfig, derive_constants
from .geometry import NomaPlacement, diff_cdf, diff_distribution, diff_pdf
from .quadrature import j0, j1, refined_interval

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class NomaInstant:
    """Instantaneous SINRs and propagation distances for one placement."""

    sinr_near: float
    sinr_far: float
    d_near: float
    d_far: float


@dataclass(frozen=True)
class NomaBreakpoints:
    """Clamped integration breakpoints of the far user's outage integral."""

    c2: float  # outage radius in squared metres (may be negative)
    m1: float
    m2: float
    m3: float
    m4: float


def noma_sinr(placement: NomaPlacement, power_w: float, cfg: SystemConfig) -> NomaInstant:
    if power_w <= 0.0:
        raise ValueError(f"power_w must be > 0, got {power_w!r}")
    dc = derive_constants(cfg)
    centre = 0.5 * cfg.region_x_m
    h_sq = cfg.pa_height_m**2
    g_near = (placement.x_near - centre) ** 2
    g_far = (placement.x_far - centre) ** 2
    y_sep = abs(placement.y_far - placement.y_near)
    d_near_sq = g_near + h_sq
    d_far_sq = g_far + y_sep**2 + h_sq
    sinr_near = dc.eta_m2 * cfg.noma_alpha_near * power_w / (dc.noise_w_ue1 * d_near_sq)
    sinr_far = (
        dc.eta_m2
        * cfg.noma_alpha_far
        * power_w
        / (dc.eta_m2 * cfg.noma_alpha_near * power_w + dc.noise_w_ue2 * d_far_sq)
    )
    return NomaInstant(
        sinr_near=sinr_near,
        sinr_far=sinr_far,
        d_near=math.sqrt(d_near_sq),
        d_far=math.sqrt(d_far_sq),
    )


def _max_y_sep(cfg: SystemConfig) -> float:
    return 2.0 * cfg.region_y_offset_m + 2.0 * cfg.region_y_m


def noma_zero_outage_thresholds(cfg: SystemConfig):
    """Powers beyond which each user's outage is exactly zero.

    Returns ``(near_w, far_w)``; ``far_w`` is None when the power split
    cannot support the far user at the configured threshold
    (alpha_far <= gamma_th * alpha_near), in which case it is always in
    outage.
    """
    dc = derive_constants(cfg)
    gth = cfg.outage_threshold
    m4 = (0.5 * cfg.region_x_m) ** 2
    h_sq = cfg.pa_height_m**2
    near = gth * dc.noise_w_ue1 * (m4 + h_sq) / (dc.eta_m2 * cfg.noma_alpha_near)
    margin = cfg.noma_alpha_far - gth * cfg.noma_alpha_near
    if margin <= 0.0:
        return near, None
    far = gth * dc.noise_w_ue2 * (m4 + _max_y_sep(cfg) ** 2 + h_sq) / (dc.eta_m2 * margin)
    return near, far


def _c1(cfg: SystemConfig, power_w: float) -> float:
    dc = derive_constants(cfg)
    return (
        dc.eta_m2 * cfg.noma_alpha_near * power_w / (cfg.outage_threshold * dc.noise_w_ue1)
        - cfg.pa_height_m**2
    )


def _c2(cfg: SystemConfig, power_w: float) -> float:
    dc = derive_constants(cfg)
    return (
        dc.eta_m2 * cfg.noma_alpha_far * power_w / (cfg.outage_threshold * dc.noise_w_ue2)
        - dc.eta_m2 * cfg.noma_alpha_near * power_w / dc.noise_w_ue2
        - cfg.pa_height_m**2
    )


def noma_breakpoints(cfg: SystemConfig, power_w: float) -> NomaBreakpoints:
    if power_w <= 0.0:
        raise ValueError(f"power_w must be > 0, got {power_w!r}")
    c2 = _c2(cfg, power_w)
    m4 = (0.5 * cfg.region_x_m) ** 2
    dy_sq = cfg.region_y_m**2

    def clamp(z):
        return min(max(z, 0.0), m4)

    return NomaBreakpoints(
        c2=c2,
        m1=clamp(c2 - 4.0 * dy_sq),
        m2=clamp(c2 - dy_sq),
        m3=clamp(c2),
        m4=m4,
    )


def noma_outage_near(cfg: SystemConfig, power_w: float) -> float:
    """Closed-form outage probability of the near user."""
    if power_w <= 0.0:
        raise ValueError(f"power_w must be > 0, got {power_w!r}")
    near_threshold, _ = noma_zero_outage_thresholds(cfg)
    if power_w >= near_threshold:
        return 0.0
    c1 = _c1(cfg, power_w)
    if c1 <= 0.0:
        return 1.0
    dx = cfg.region_x_m
    m4 = (0.5 * dx) ** 2
    if c1 >= m4:
        return 0.0
    value = 1.0 - 4.0 * math.sqrt(c1) / dx + 4.0 * c1 / dx**2
    return min(max(value, 0.0), 1.0)


def noma_outage_far(cfg: SystemConfig, power_w: float, n_nodes: int = 64) -> float:
    """Outage probability of the far user.

    Closed-form segment integrals over the far user's squared x-offset when
    the sub-regions are adjacent; quadrature against the translated
    separation CDF otherwise. Both the no-coverage (outage radius <= 0) and
    full-coverage (radius beyond the farthest region point) cases short
    circuit exactly.
    """
    if power_w <= 0.0:
        raise ValueError(f"power_w must be > 0, got {power_w!r}")
    c2 = _c2(cfg, power_w)
    if c2 <= 0.0:
        return 1.0
    _, far_threshold = noma_zero_outage_thresholds(cfg)
    m4 = (0.5 * cfg.region_x_m) ** 2
    if power_w >= (far_threshold if far_threshold is not None else math.inf):
        return 0.0
    if c2 >= m4 + _max_y_sep(cfg) ** 2:
        return 0.0
    if cfg.region_y_offset_m > 0.0:
        return _outage_far_quadrature(cfg, power_w, n_nodes)

    bp = noma_breakpoints(cfg, power_w)
    dy = cfg.region_y_m

    def phi1(m):
        return (
            2.0 * m
            + 4.0 / (3.0 * dy) * (c2 - m) ** 1.5
            + (c2 * m - 0.5 * m**2) / (2.0 * dy**2)
        )

    def phi2(m):
        return m - c2 * m / (2.0 * dy**2) + m**2 / (4.0 * dy**2)

    total = (
        (phi1(bp.m2) - phi1(bp.m1))
        + (phi2(bp.m3) - phi2(bp.m2))
        + (bp.m4 - bp.m3)
    )
    value = 4.0 / cfg.region_x_m**2 * total
    return min(max(value, 0.0), 1.0)


def _outage_far_quadrature(cfg: SystemConfig, power_w: float, n_nodes: int) -> float:
    """Far-user outage by integrating the conditional tail over the x-offset."""
    c2 = _c2(cfg, power_w)
    dist = diff_distribution(cfg)
    m4 = (0.5 * cfg.region_x_m) ** 2

    def conditional(m):
        m = np.asarray(m)
        radius = np.sqrt(np.clip(c2 - m, 0.0, None))
        return 1.0 - diff_cdf(radius, dist)

    value = 4.0 / cfg.region_x_m**2 * refined_interval(conditional, 0.0, m4, n_nodes)
    return min(max(value, 0.0), 1.0)


def noma_rate_near(cfg: SystemConfig, power_w: float) -> float:
    """Closed-form average rate of the near user in bits/s/Hz."""
    if power_w <= 0.0:
        raise ValueError(f"power_w must be > 0, got {power_w!r}")
    dc = derive_constants(cfg)
    k = dc.eta_m2 * cfg.noma_alpha_near * power_w / dc.noise_w_ue1
    dx = cfg.region_x_m
    centre = 0.5 * dx
    h_sq = cfg.pa_height_m**2
    term0 = j0(centre, h_sq + k, 1.0) - j0(centre, h_sq, 1.0)
    term1 = (j1(centre, h_sq + k, 1.0) - j1(0.0, h_sq + k, 1.0)) - (
        j1(centre, h_sq, 1.0) - j1(0.0, h_sq, 1.0)
    )
    return (4.0 / dx * term0 - 8.0 / dx**2 * term1) / _LN2


def noma_rate_far(cfg: SystemConfig, power_w: float, n_nodes: int = 64) -> float:
    """Average rate of the far user in bits/s/Hz (below log2(1 + a2/a1)).

    The average over the y-separation is closed-form for adjacent
    sub-regions and quadrature against the translated density otherwise;
    the outer average over the squared x-offset uses the Chebyshev rule.
    """
    if power_w <= 0.0:
        raise ValueError(f"power_w must be > 0, got {power_w!r}")
    dc = derive_constants(cfg)
    k1 = dc.eta_m2 * cfg.noma_alpha_near * power_w
    k2 = dc.eta_m2 * cfg.noma_alpha_far * power_w
    n2 = dc.noise_w_ue2
    h_sq = cfg.pa_height_m**2
    dx = cfg.region_x_m
    m4 = (0.5 * dx) ** 2
    dist = diff_distribution(cfg)

    if cfg.region_y_offset_m > 0.0:

        def expected_log(beta):
            def f(a):
                a = np.asarray(a)
                return np.log(beta + n2 * a**2) * diff_pdf(a, dist)

            return refined_interval(f, dist.support_lo, dist.peak, n_nodes) + refined_interval(
                f, dist.peak, dist.support_hi, n_nodes
            )

        def delta(m):
            m = np.atleast_1d(np.asarray(m, dtype=float))
            beta1 = k1 + n2 * (h_sq + m)
            return np.asarray(
                [expected_log(b1 + k2) - expected_log(b1) for b1 in beta1]
            )

    else:
        dy = cfg.region_y_m

        def expected_log(beta):
            t_mid = (j1(dy, beta, n2) - j1(0.0, beta, n2)) / dy**2
            t_hi0 = 2.0 * (j0(2.0 * dy, beta, n2) - j0(dy, beta, n2)) / dy
            t_hi1 = (j1(2.0 * dy, beta, n2) - j1(dy, beta, n2)) / dy**2
            return t_mid + t_hi0 - t_hi1

        def delta(m):
            beta1 = k1 + n2 * (h_sq + np.asarray(m))
            return expected_log(beta1 + k2) - expected_log(beta1)

    integral = refined_interval(delta, 0.0, m4, n_nodes)
    return 4.0 / (dx**2 * _LN2) * integral
