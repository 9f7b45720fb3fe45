"""Per-waveguide access: instantaneous SINR, outage, average rate, limits.

Each user is served by a dedicated waveguide antenna pinned above it; the
other user's antenna interferes across waveguides. Outage and rate reduce
to one-dimensional integrals over the user's x-coordinate evaluated with
the Chebyshev rule; high-SNR limits give an interference-only outage floor
and rate ceiling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import SystemConfig, derive_constants, noise_w
from .geometry import (
    WdmaPlacement,
    diff_distribution,
    diff_pdf,
    g_axis,
    sq_diff_cdf,
)
from .quadrature import j0, j1, refined_interval, refined_unit

_LN2 = math.log(2.0)

# Relative slack under which 1/gamma_th - B*G(x) is treated as zero: the
# threshold on the y-separation diverges there and the CDF saturates anyway.
_SINGULAR_SLACK = 1e-12


@dataclass(frozen=True)
class WdmaInstant:
    """Instantaneous SINRs and channel power gains for one placement.

    ``signal_gain`` / ``interference_gain`` hold the (user 1, user 2) pairs.
    """

    sinr_ue1: float
    sinr_ue2: float
    signal_gain: tuple
    interference_gain: tuple


def wdma_sinr(placement: WdmaPlacement, power_w: float, cfg: SystemConfig) -> WdmaInstant:
    """SINRs of both users under an equal split of ``power_w`` across waveguides."""
    if power_w <= 0.0:
        raise ValueError(f"power_w must be > 0, got {power_w!r}")
    dc = derive_constants(cfg)
    g1 = g_axis(placement.x_ue1, cfg)
    g2 = g_axis(placement.x_ue2, cfg)
    ysep_sq = (placement.y_ue1 - placement.y_ue2) ** 2
    sig1 = dc.eta_m2 / g1
    sig2 = dc.eta_m2 / g2
    int1 = dc.eta_m2 / (g1 + ysep_sq)
    int2 = dc.eta_m2 / (g2 + ysep_sq)
    sinr1 = sig1 / (int1 + 2.0 * dc.noise_w_ue1 / power_w)
    sinr2 = sig2 / (int2 + 2.0 * dc.noise_w_ue2 / power_w)
    return WdmaInstant(
        sinr_ue1=sinr1,
        sinr_ue2=sinr2,
        signal_gain=(sig1, sig2),
        interference_gain=(int1, int2),
    )


def wdma_outage(cfg: SystemConfig, power_w: float, n_nodes: int = 64, user: int = 1) -> float:
    """Outage probability of ``user`` at transmit power ``power_w``.

    Averages the conditional outage over the user's x-coordinate: given x,
    the outage event caps the squared y-separation at a threshold; the cap
    is pushed through the separation CDF. Where the noise term alone drives
    the SINR below threshold the conditional outage is 1 regardless of y.
    """
    if power_w <= 0.0:
        raise ValueError(f"power_w must be > 0, got {power_w!r}")
    dc = derive_constants(cfg)
    sigma2 = noise_w(cfg, user)
    b_noise = 2.0 * sigma2 / (dc.eta_m2 * power_w)
    q = 1.0 / cfg.outage_threshold
    dist = diff_distribution(cfg)
    half = 0.5 * cfg.region_x_m

    # The conditional outage grows with the axis distance, whose minimum
    # (height squared) is reached inside the region, so saturation there
    # means the integrand is 1 everywhere and the integral is exactly 1.
    g_min = cfg.pa_height_m**2
    den_min = q - b_noise * g_min
    if den_min <= _SINGULAR_SLACK * b_noise * g_min:
        return 1.0
    if cfg.outage_threshold >= 1.0 and sq_diff_cdf(g_min / den_min - g_min, dist) >= 1.0:
        return 1.0

    def conditional(t):
        g = g_axis(half * (np.asarray(t) + 1.0), cfg)
        den = q - b_noise * g
        saturated = den <= _SINGULAR_SLACK * b_noise * g
        den_safe = np.where(saturated, 1.0, den)
        cap = g / den_safe - g
        return np.where(saturated, 1.0, sq_diff_cdf(cap, dist))

    value = 0.5 * refined_unit(conditional, n_nodes)
    return min(max(value, 0.0), 1.0)


def _log_rate_coeffs(g, b_noise):
    """Quadratic coefficients of the instantaneous rate's log arguments.

    log2(1 + sinr) = (1/ln 2) ln((a + b u^2) / (c + d u^2)) with u the
    y-separation and g the squared axis distance.
    """
    a = 2.0 * g + b_noise * g**2
    b = 1.0 + b_noise * g
    c = g + b_noise * g**2
    d = b_noise * g
    return a, b, c, d


def wdma_avg_rate(cfg: SystemConfig, power_w: float, n_nodes: int = 64, user: int = 1) -> float:
    """Average achievable rate of ``user`` in bits/s/Hz.

    With adjacent sub-regions the inner average over the y-separation is
    closed-form via the logarithmic antiderivatives; with an offset it is
    integrated against the translated triangular density. The outer
    x-average always uses the Chebyshev rule.
    """
    if power_w <= 0.0:
        raise ValueError(f"power_w must be > 0, got {power_w!r}")
    if cfg.region_y_offset_m > 0.0:
        return _avg_rate_quadrature(cfg, power_w, n_nodes, user)
    dc = derive_constants(cfg)
    sigma2 = noise_w(cfg, user)
    b_noise = 2.0 * sigma2 / (dc.eta_m2 * power_w)
    dy = cfg.region_y_m
    half = 0.5 * cfg.region_x_m

    def phi(t):
        g = g_axis(half * (np.asarray(t) + 1.0), cfg)
        a, b, c, d = _log_rate_coeffs(g, b_noise)

        def p0(y):
            return j0(y, a, b) - j0(y, c, d)

        def p1(y):
            return (j1(y, a, b) - j1(0.0, a, b)) - (j1(y, c, d) - j1(0.0, c, d))

        return 2.0 * p1(dy) - p1(2.0 * dy) + 2.0 * dy * (p0(2.0 * dy) - p0(dy))

    return refined_unit(phi, n_nodes) / (2.0 * dy**2 * _LN2)


def _avg_rate_quadrature(cfg: SystemConfig, power_w: float, n_nodes: int, user: int = 1) -> float:
    """Rate via nested quadrature over the translated separation density."""
    dc = derive_constants(cfg)
    sigma2 = noise_w(cfg, user)
    b_noise = 2.0 * sigma2 / (dc.eta_m2 * power_w)
    dist = diff_distribution(cfg)
    half = 0.5 * cfg.region_x_m

    def inner(x):
        g = g_axis(x, cfg)
        a, b, c, d = _log_rate_coeffs(g, b_noise)

        def f(u):
            u = np.asarray(u)
            return np.log((a + b * u**2) / (c + d * u**2)) * diff_pdf(u, dist)

        # split at the density peak where the triangular kink sits
        return refined_interval(f, dist.support_lo, dist.peak, n_nodes) + refined_interval(
            f, dist.peak, dist.support_hi, n_nodes
        )

    def outer(t):
        x = half * (np.asarray(t) + 1.0)
        return np.asarray([inner(xi) for xi in np.atleast_1d(x)])

    return 0.5 * refined_unit(outer, n_nodes) / _LN2


def wdma_outage_floor(cfg: SystemConfig, n_nodes: int = 64) -> float:
    """High-SNR outage limit: interference-only outage averaged over x."""
    gth = cfg.outage_threshold
    dist = diff_distribution(cfg)
    half = 0.5 * cfg.region_x_m

    # saturation at the minimal axis distance implies saturation everywhere
    if gth > 1.0 and sq_diff_cdf((gth - 1.0) * cfg.pa_height_m**2, dist) >= 1.0:
        return 1.0

    def conditional(t):
        g = g_axis(half * (np.asarray(t) + 1.0), cfg)
        return sq_diff_cdf((gth - 1.0) * g, dist)

    value = 0.5 * refined_unit(conditional, n_nodes)
    return min(max(value, 0.0), 1.0)


def wdma_rate_ceiling(cfg: SystemConfig, n_nodes: int = 64) -> float:
    """High-SNR rate limit in bits/s/Hz (at least 1: the interference-only
    SINR never falls below one)."""
    dy = cfg.region_y_m
    half = 0.5 * cfg.region_x_m
    dist = diff_distribution(cfg)

    if cfg.region_y_offset_m > 0.0:

        def inner(x):
            g = g_axis(x, cfg)

            def f(u):
                u = np.asarray(u)
                return np.log(2.0 + u**2 / g) * diff_pdf(u, dist)

            return refined_interval(f, dist.support_lo, dist.peak, n_nodes) + refined_interval(
                f, dist.peak, dist.support_hi, n_nodes
            )

        def outer(t):
            x = half * (np.asarray(t) + 1.0)
            return np.asarray([inner(xi) for xi in np.atleast_1d(x)])

        return 0.5 * refined_unit(outer, n_nodes) / _LN2

    def phi_bar(t):
        g = g_axis(half * (np.asarray(t) + 1.0), cfg)
        log_g = np.log(g)

        # ln(2 + u^2/g) = ln(2g + u^2) - ln(g)
        def p0(y):
            return j0(y, 2.0 * g, 1.0) - y * log_g

        def p1(y):
            return j1(y, 2.0 * g, 1.0) - j1(0.0, 2.0 * g, 1.0) - 0.5 * y**2 * log_g

        return 2.0 * p1(dy) - p1(2.0 * dy) + 2.0 * dy * (p0(2.0 * dy) - p0(dy))

    return refined_unit(phi_bar, n_nodes) / (2.0 * dy**2 * _LN2)
