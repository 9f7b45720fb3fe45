"""User placement sampling and the exact distributions of derived quantities.

Both access schemes share the same geometry: user x-coordinates are uniform
along the service region, y-coordinates are uniform in two disjoint
sub-regions on either side of the waveguide axis. The y-separation of the
two users follows a triangular distribution; its square and the ordered
x-offsets have the closed-form CDFs implemented here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import SystemConfig


def _maybe_scalar(arr):
    arr = np.asarray(arr)
    return arr.item() if arr.ndim == 0 else arr


@dataclass
class WdmaPlacement:
    """One realisation of the two per-waveguide users.

    The antenna serving user i sits at (region_x_m / 2, y_ue_i, pa_height_m);
    it is never stored because it is pinned to the user's y-coordinate.
    Fields may be scalars or equally shaped arrays (one entry per trial).
    """

    x_ue1: object
    x_ue2: object
    y_ue1: object
    y_ue2: object


@dataclass
class NomaPlacement:
    """One realisation of the near/far user pair served by a single antenna.

    ``x_near`` is the x-coordinate closest to the region centre; the antenna
    sits at (region_x_m / 2, y_near, pa_height_m).
    """

    x_near: object
    x_far: object
    y_near: object
    y_far: object


@dataclass(frozen=True)
class DiffDistribution:
    """Triangular law of the y-separation between the two users.

    The separation u = y_ue1 - y_ue2 is supported on
    [2*offset, 2*offset + 2*half_width] with its peak at the midpoint.
    """

    half_width: float  # sub-region depth (region_y_m)
    offset: float  # sub-region gap from the axis (region_y_offset_m)

    @property
    def support_lo(self) -> float:
        return 2.0 * self.offset

    @property
    def support_hi(self) -> float:
        return 2.0 * self.offset + 2.0 * self.half_width

    @property
    def peak(self) -> float:
        return 2.0 * self.offset + self.half_width


def diff_distribution(cfg: SystemConfig) -> DiffDistribution:
    return DiffDistribution(half_width=cfg.region_y_m, offset=cfg.region_y_offset_m)


def g_axis(x, cfg: SystemConfig):
    """Squared antenna-to-user distance projected on the axis plane.

    Returns (x - region_x_m/2)^2 + pa_height_m^2; accepts arrays.
    """
    x = np.asarray(x, dtype=float)
    return _maybe_scalar((x - 0.5 * cfg.region_x_m) ** 2 + cfg.pa_height_m**2)


def sample_wdma(cfg: SystemConfig, rng: np.random.Generator, size=None) -> WdmaPlacement:
    """Draw uniform placements for both per-waveguide users.

    Consumes exactly four uniforms per trial in the fixed order
    (x_ue1, x_ue2, y_ue1, y_ue2), which keeps counter-based trial
    partitioning reproducible.
    """
    n = 1 if size is None else int(size)
    u = rng.random((n, 4))
    x1 = cfg.region_x_m * u[:, 0]
    x2 = cfg.region_x_m * u[:, 1]
    y1 = cfg.region_y_offset_m + cfg.region_y_m * u[:, 2]
    y2 = -(cfg.region_y_offset_m + cfg.region_y_m * u[:, 3])
    if size is None:
        return WdmaPlacement(x1.item(), x2.item(), y1.item(), y2.item())
    return WdmaPlacement(x1, x2, y1, y2)


def sample_noma(cfg: SystemConfig, rng: np.random.Generator, size=None) -> NomaPlacement:
    """Draw the near/far pair: x-coordinates ordered by distance to centre.

    Consumes exactly four uniforms per trial in the fixed order
    (x_a, x_b, y_near, y_far).
    """
    n = 1 if size is None else int(size)
    u = rng.random((n, 4))
    xa = cfg.region_x_m * u[:, 0]
    xb = cfg.region_x_m * u[:, 1]
    y_near = cfg.region_y_offset_m + cfg.region_y_m * u[:, 2]
    y_far = -(cfg.region_y_offset_m + cfg.region_y_m * u[:, 3])
    centre = 0.5 * cfg.region_x_m
    a_is_near = np.abs(xa - centre) <= np.abs(xb - centre)
    x_near = np.where(a_is_near, xa, xb)
    x_far = np.where(a_is_near, xb, xa)
    if size is None:
        return NomaPlacement(x_near.item(), x_far.item(), y_near.item(), y_far.item())
    return NomaPlacement(x_near, x_far, y_near, y_far)


def diff_pdf(u, dist: DiffDistribution):
    """Density of the y-separation (triangular)."""
    w = dist.half_width
    v = np.asarray(u, dtype=float) - dist.support_lo
    rising = (v > 0.0) & (v <= w)
    falling = (v > w) & (v < 2.0 * w)
    out = np.zeros_like(v)
    out = np.where(rising, v / w**2, out)
    out = np.where(falling, (2.0 * w - v) / w**2, out)
    return _maybe_scalar(out)


def diff_cdf(u, dist: DiffDistribution):
    """CDF of the y-separation (triangular)."""
    w = dist.half_width
    v = np.asarray(u, dtype=float) - dist.support_lo
    lower = np.clip(v, 0.0, w)
    upper = np.clip(2.0 * w - v, 0.0, w)
    out = np.where(v <= w, lower**2 / (2.0 * w**2), 1.0 - upper**2 / (2.0 * w**2))
    return _maybe_scalar(out)


def sq_diff_cdf(y, dist: DiffDistribution):
    """CDF of the squared y-separation.

    Equals the triangular CDF evaluated at sqrt(y); with zero offset this is
    the four-piece form y/(2 w^2) on (0, w^2], (4 w sqrt(y) - y)/(2 w^2) - 1
    on (w^2, 4 w^2], clamped to 0 and 1 outside.
    """
    y = np.asarray(y, dtype=float)
    r = np.sqrt(np.clip(y, 0.0, None))
    out = np.where(y <= 0.0, 0.0, diff_cdf(r, dist))
    return _maybe_scalar(out)


def near_coord_cdf_g(g, cfg: SystemConfig):
    """CDF of the squared x-offset of the near (ordered) user."""
    dx = cfg.region_x_m
    m4 = (0.5 * dx) ** 2
    g = np.asarray(g, dtype=float)
    gc = np.clip(g, 0.0, m4)
    root = np.sqrt(gc)
    out = np.where(g <= 0.0, 0.0, np.where(g >= m4, 1.0, 4.0 * root / dx - 4.0 * gc / dx**2))
    return _maybe_scalar(out)


def near_pdf(x, cfg: SystemConfig):
    """Density of the near user's x-coordinate: 2/D - 4|x - D/2|/D^2 on [0, D]."""
    dx = cfg.region_x_m
    x = np.asarray(x, dtype=float)
    inside = (x >= 0.0) & (x <= dx)
    val = 2.0 / dx - 4.0 * np.abs(x - 0.5 * dx) / dx**2
    return _maybe_scalar(np.where(inside, val, 0.0))


def far_pdf(x, cfg: SystemConfig):
    """Density of the far user's x-coordinate: 4|x - D/2|/D^2 on [0, D]."""
    dx = cfg.region_x_m
    x = np.asarray(x, dtype=float)
    inside = (x >= 0.0) & (x <= dx)
    val = 4.0 * np.abs(x - 0.5 * dx) / dx**2
    return _maybe_scalar(np.where(inside, val, 0.0))
