"""Analytical and Monte Carlo performance analysis of two-user downlink
pinching-antenna systems under per-waveguide (WDMA) and power-domain
(NOMA) access."""

from .config import (
    ConfigError,
    DerivedConstants,
    SystemConfig,
    db_to_linear,
    dbm_to_watts,
    derive_constants,
    linear_to_db,
    load_config,
    noise_w,
    power_w_to_snr_db,
    snr_db_to_power_w,
    watts_to_dbm,
)
from .geometry import (
    DiffDistribution,
    NomaPlacement,
    WdmaPlacement,
    diff_cdf,
    diff_distribution,
    diff_pdf,
    far_pdf,
    g_axis,
    near_coord_cdf_g,
    near_pdf,
    sample_noma,
    sample_wdma,
    sq_diff_cdf,
)
from .montecarlo import McSpec, MetricEstimate, mc_outage, mc_rate, sinr_trials
from .noma import (
    NomaBreakpoints,
    NomaInstant,
    noma_breakpoints,
    noma_outage_far,
    noma_outage_near,
    noma_rate_far,
    noma_rate_near,
    noma_sinr,
    noma_zero_outage_thresholds,
)
from .quadrature import (
    IntegrationError,
    QuadratureRule,
    chebyshev_rule,
    integrate_interval,
    integrate_unit,
    j0,
    j1,
    refined_interval,
    refined_unit,
)
from .sweep import (
    SweepResult,
    SweepRow,
    SweepSpec,
    ValidationReport,
    find_crossover,
    omega_one,
    omega_two,
    read_csv,
    run_sweep,
    snr_grid,
    to_csv_text,
    validate,
    write_csv,
)
from .wdma import (
    WdmaInstant,
    wdma_avg_rate,
    wdma_outage,
    wdma_outage_floor,
    wdma_rate_ceiling,
    wdma_sinr,
)

__version__ = "0.1.0"
