"""SNR sweeps, analytic-vs-simulation validation, and crossover search.

Produces long-format rows (one per grid point x scheme x user x metric)
ready for CSV emission, with optional simulation estimates and constant
asymptote columns (outage floors, rate ceilings).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field, replace

from .config import ConfigError, SystemConfig, noise_w, snr_db_to_power_w
from .montecarlo import McSpec, mc_outage, mc_rate
from .noma import (
    noma_outage_far,
    noma_outage_near,
    noma_rate_far,
    noma_rate_near,
    noma_zero_outage_thresholds,
)
from .wdma import wdma_avg_rate, wdma_outage, wdma_outage_floor, wdma_rate_ceiling

SCHEMES = ("wdma", "noma")
METRICS = ("outage", "rate")
CSV_HEADER = ("snr_db", "scheme", "user", "metric", "analytic", "asymptote", "mc_value", "mc_std_error")


class NumericalError(RuntimeError):
    """A metric evaluated to a non-finite value during a search."""


@dataclass(frozen=True)
class SweepSpec:
    """Grid and column selection for one sweep run."""

    snr_db_start: float = 90.0
    snr_db_stop: float = 150.0
    snr_db_step: float = 2.0
    schemes: tuple = SCHEMES
    metrics: tuple = METRICS
    include_mc: bool = False
    include_asymptotes: bool = False
    mc_trials: int = 100_000
    mc_seed: int = 12345

    def __post_init__(self):
        if not self.snr_db_step > 0.0:
            raise ConfigError(f"snr_db_step must be > 0, got {self.snr_db_step!r}")
        if self.snr_db_start > self.snr_db_stop:
            raise ConfigError(
                f"snr_db_start must be <= snr_db_stop, got "
                f"({self.snr_db_start!r}, {self.snr_db_stop!r})"
            )
        unknown = sorted(set(self.schemes) - set(SCHEMES))
        if unknown:
            raise ConfigError(f"schemes contains unknown entries: {unknown}")
        unknown = sorted(set(self.metrics) - set(METRICS))
        if unknown:
            raise ConfigError(f"metrics contains unknown entries: {unknown}")
        if self.mc_trials < 1:
            raise ConfigError(f"mc_trials must be >= 1, got {self.mc_trials!r}")


@dataclass(frozen=True)
class SweepRow:
    snr_db: float
    scheme: str
    user: int
    metric: str
    analytic: float
    asymptote: float | None = None
    mc_value: float | None = None
    mc_std_error: float | None = None


@dataclass
class SweepResult:
    rows: list = field(default_factory=list)


def snr_grid(spec: SweepSpec) -> list:
    """Inclusive dB grid start, start + step, ... up to stop."""
    count = int(math.floor((spec.snr_db_stop - spec.snr_db_start) / spec.snr_db_step + 1e-9)) + 1
    return [spec.snr_db_start + i * spec.snr_db_step for i in range(count)]


def analytic_metric(
    scheme: str, user: int, metric: str, cfg: SystemConfig, power_w: float, n_nodes: int = 64
) -> float:
    """Dispatch one (scheme, user, metric) cell to its analytic operation."""
    if scheme == "wdma":
        if metric == "outage":
            return wdma_outage(cfg, power_w, n_nodes, user=user)
        return wdma_avg_rate(cfg, power_w, n_nodes, user=user)
    if metric == "outage":
        return noma_outage_near(cfg, power_w) if user == 1 else noma_outage_far(cfg, power_w, n_nodes)
    return noma_rate_near(cfg, power_w) if user == 1 else noma_rate_far(cfg, power_w, n_nodes)


def asymptote_value(
    scheme: str, user: int, metric: str, cfg: SystemConfig, n_nodes: int = 64
) -> float | None:
    """High-SNR limit of one cell; None where the metric grows unbounded."""
    if scheme == "wdma":
        if metric == "outage":
            return wdma_outage_floor(cfg, n_nodes)
        return wdma_rate_ceiling(cfg, n_nodes)
    if metric == "outage":
        if user == 1:
            return 0.0
        _, far_threshold = noma_zero_outage_thresholds(cfg)
        return 0.0 if far_threshold is not None else 1.0
    if user == 1:
        return None  # near-user rate grows without bound
    return math.log2(1.0 + cfg.noma_alpha_far / cfg.noma_alpha_near)


def _sweep_users(scheme: str) -> tuple:
    # the two per-waveguide users are symmetric (indices swapped), so sweeps
    # report user 1 for wdma; the noma users are genuinely distinct
    return (1,) if scheme == "wdma" else (1, 2)


def run_sweep(spec: SweepSpec, cfg: SystemConfig, n_nodes: int = 64) -> SweepResult:
    """Fill every requested cell of the SNR grid.

    Transmit SNR is referenced to the user-1 noise power. Rows come out
    sorted by (snr_db, scheme, user, metric).
    """
    reference_noise = noise_w(cfg, 1)
    asymptotes = {}
    if spec.include_asymptotes:
        for scheme in spec.schemes:
            for user in _sweep_users(scheme):
                for metric in spec.metrics:
                    asymptotes[(scheme, user, metric)] = asymptote_value(
                        scheme, user, metric, cfg, n_nodes
                    )
    rows = []
    for snr_db in snr_grid(spec):
        power_w = snr_db_to_power_w(snr_db, reference_noise)
        for scheme in spec.schemes:
            for user in _sweep_users(scheme):
                for metric in spec.metrics:
                    analytic = analytic_metric(scheme, user, metric, cfg, power_w, n_nodes)
                    mc_value = mc_std_error = None
                    if spec.include_mc:
                        mc_spec = McSpec(spec.mc_trials, spec.mc_seed, scheme, user)
                        est = (mc_outage if metric == "outage" else mc_rate)(mc_spec, cfg, power_w)
                        mc_value, mc_std_error = est.value, est.std_error
                    rows.append(
                        SweepRow(
                            snr_db=snr_db,
                            scheme=scheme,
                            user=user,
                            metric=metric,
                            analytic=analytic,
                            asymptote=asymptotes.get((scheme, user, metric)),
                            mc_value=mc_value,
                            mc_std_error=mc_std_error,
                        )
                    )
    rows.sort(key=lambda r: (r.snr_db, r.scheme, r.user, r.metric))
    return SweepResult(rows=rows)


def _format_cell(value) -> str:
    return "" if value is None else repr(value)


def _parse_cell(text: str) -> float | None:
    return None if text == "" else float(text)


def write_csv(result: SweepResult, fileobj) -> None:
    writer = csv.writer(fileobj, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in result.rows:
        writer.writerow(
            [
                repr(row.snr_db),
                row.scheme,
                str(row.user),
                row.metric,
                _format_cell(row.analytic),
                _format_cell(row.asymptote),
                _format_cell(row.mc_value),
                _format_cell(row.mc_std_error),
            ]
        )


def to_csv_text(result: SweepResult) -> str:
    buf = io.StringIO()
    write_csv(result, buf)
    return buf.getvalue()


def read_csv(fileobj) -> SweepResult:
    reader = csv.reader(fileobj)
    header = next(reader)
    if tuple(header) != CSV_HEADER:
        raise ConfigError(f"unexpected CSV header: {header!r}")
    rows = []
    for record in reader:
        rows.append(
            SweepRow(
                snr_db=float(record[0]),
                scheme=record[1],
                user=int(record[2]),
                metric=record[3],
                analytic=float(record[4]),
                asymptote=_parse_cell(record[5]),
                mc_value=_parse_cell(record[6]),
                mc_std_error=_parse_cell(record[7]),
            )
        )
    return SweepResult(rows=rows)


CROSSOVER_METRICS = ("rate_sum", "outage_ue")


def find_crossover(
    cfg: SystemConfig,
    metric: str,
    bracket_db: tuple,
    n_nodes: int = 64,
    tol_db: float = 0.01,
) -> float | None:
    """Bisect for the SNR where the scheme difference changes sign.

    ``rate_sum`` compares the NOMA sum rate against the WDMA sum rate (both
    users each); ``outage_ue`` compares the NOMA far-user outage against the
    WDMA user-1 outage. Returns None when the difference has one sign over
    the whole bracket.
    """
    if metric not in CROSSOVER_METRICS:
        raise ConfigError(f"metric must be one of {CROSSOVER_METRICS}, got {metric!r}")
    lo, hi = float(bracket_db[0]), float(bracket_db[1])
    if not hi > lo:
        raise ConfigError(f"bracket width must be > 0, got {bracket_db!r}")
    reference_noise = noise_w(cfg, 1)

    def difference(snr_db: float) -> float:
        power_w = snr_db_to_power_w(snr_db, reference_noise)
        if metric == "rate_sum":
            value = (
                noma_rate_near(cfg, power_w)
                + noma_rate_far(cfg, power_w, n_nodes)
                - wdma_avg_rate(cfg, power_w, n_nodes, user=1)
                - wdma_avg_rate(cfg, power_w, n_nodes, user=2)
            )
        else:
            value = noma_outage_far(cfg, power_w, n_nodes) - wdma_outage(
                cfg, power_w, n_nodes, user=1
            )
        if not math.isfinite(value):
            raise NumericalError(f"{metric} difference not finite at {snr_db} dB")
        return value

    def sign(value: float) -> int:
        return (value > 0.0) - (value < 0.0)

    # A crossover needs strictly opposite signs at the bracket ends. An
    # exactly zero difference (e.g. both outage probabilities saturated at
    # one on a low-SNR plateau) carries no sign information and yields None;
    # pick a bracket whose ends sit outside such plateaus.
    s_lo = sign(difference(lo))
    s_hi = sign(difference(hi))
    if s_lo == 0 or s_hi == 0 or s_lo == s_hi:
        return None
    while hi - lo > tol_db:
        mid = 0.5 * (lo + hi)
        if sign(difference(mid)) == s_hi:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class ValidationCell:
    scheme: str
    user: int
    metric: str
    snr_db: float
    analytic: float
    mc_value: float
    mc_std_error: float
    tolerance: float
    passed: bool


@dataclass
class ValidationReport:
    cells: list
    sigma_tol: float

    @property
    def passed(self) -> bool:
        return all(cell.passed for cell in self.cells)

    @property
    def failures(self) -> list:
        return [cell for cell in self.cells if not cell.passed]

    def summary(self) -> str:
        n_fail = len(self.failures)
        return (
            f"{len(self.cells) - n_fail}/{len(self.cells)} cells within "
            f"{self.sigma_tol} sigma ({'PASS' if n_fail == 0 else f'{n_fail} FAIL'})"
        )


def cell_tolerance(metric: str, analytic: float, mc_std_error: float, sigma_tol: float) -> float:
    """Acceptance band: sigma_tol standard errors, widened to 1% relative for rates."""
    band = sigma_tol * mc_std_error
    if metric == "rate":
        band = max(band, 0.01 * abs(analytic))
    return band


def validate(
    cfg: SystemConfig,
    grid_db,
    trials: int,
    seed: int,
    sigma_tol: float = 3.0,
    n_nodes: int = 64,
) -> ValidationReport:
    """Check every analytic cell against its simulation estimate."""
    if trials < 1:
        raise ConfigError(f"trials must be >= 1, got {trials!r}")
    reference_noise = noise_w(cfg, 1)
    cells = []
    for snr_db in grid_db:
        power_w = snr_db_to_power_w(float(snr_db), reference_noise)
        for scheme in SCHEMES:
            for user in (1, 2):
                for metric in METRICS:
                    analytic = analytic_metric(scheme, user, metric, cfg, power_w, n_nodes)
                    spec = McSpec(trials, seed, scheme, user)
                    est = (mc_outage if metric == "outage" else mc_rate)(spec, cfg, power_w)
                    tolerance = cell_tolerance(metric, analytic, est.std_error, sigma_tol)
                    cells.append(
                        ValidationCell(
                            scheme=scheme,
                            user=user,
                            metric=metric,
                            snr_db=float(snr_db),
                            analytic=analytic,
                            mc_value=est.value,
                            mc_std_error=est.std_error,
                            tolerance=tolerance,
                            passed=abs(analytic - est.value) <= tolerance,
                        )
                    )
    return ValidationReport(cells=cells, sigma_tol=sigma_tol)


def omega_one(cfg: SystemConfig | None = None) -> SystemConfig:
    """Compact deployment: 10 m deep sub-regions adjacent to the axis."""
    base = cfg if cfg is not None else SystemConfig()
    return replace(base, region_y_m=10.0, region_y_offset_m=0.0)


def omega_two(cfg: SystemConfig | None = None) -> SystemConfig:
    """Dispersed deployment: 10 m deep sub-regions offset 10 m from the axis."""
    base = cfg if cfg is not None else SystemConfig()
    return replace(base, region_y_m=10.0, region_y_offset_m=10.0)
