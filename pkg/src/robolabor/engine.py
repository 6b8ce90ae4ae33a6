"""Scenario simulation over single-shock and multi-year horizons.

A scenario bundles shock paths (robotics stock growth, relative cost
shifts), optional parameter overrides, and reporting metadata. The engine
walks the horizon year by year, carries TFP and the robotics stock forward,
prices labor demand off the cumulative cost shift, and emits one record per
year plus a terminal summary with sector, headcount and remittance
breakdowns.

Two gain metrics are reported and they answer different questions:

* ``YearRecord.output_gain_vs_baseline`` is the realized economy-wide gain
  including the drag from displaced labor.
* ``ResultSummary.gdp_gain`` holds labor at its baseline level and isolates
  the robotics-capital and TFP channels. Headline projections are quoted
  this way, so scenario targets compare against it.

Comparative statics are one-year dynamics: running ``mode=dynamic`` over a
single year reproduces the comparative-static result field by field.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field, replace
from typing import Sequence, Union

from .core import (
    EconomyState,
    ModelParams,
    StaticTheta,
    ThetaMode,
    ThetaRamp,
    YEAR_MAX,
    YEAR_MIN,
    labor_demand_ratio,
    production_output,
    tfp_step,
    theta_at,
)
from .errors import DomainError
from .sectors import (
    HeadcountBreakdown,
    JobCreationModel,
    JobCreationRamp,
    JobCreationRatio,
    LaborBaseline,
    SectorProfile,
    disaggregate_displacement,
    displacement_headcounts,
    job_creation,
    remittance_impact,
)

__all__ = [
    "SimulationMode",
    "TargetSet",
    "RawShocks",
    "Scenario",
    "YearRecord",
    "ResultSummary",
    "TargetGap",
    "SimulationResult",
    "run_comparative_static",
    "run_dynamic",
    "run_scenario",
    "compare_to_targets",
]

_NAME_RE = re.compile(r"^[A-Za-z0-9_-]+$")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


class SimulationMode(str, enum.Enum):
    COMPARATIVE_STATIC = "comparative_static"
    DYNAMIC = "dynamic"


@dataclass(frozen=True)
class TargetSet:
    """Published outcomes a scenario is calibrated to reproduce."""

    gdp_gain: float | None = None
    displacement: float | None = None

    def __post_init__(self) -> None:
        if self.gdp_gain is not None:
            _require(self.gdp_gain > -1,
                     f"gdp_gain target must exceed -1, got {self.gdp_gain}")
        if self.displacement is not None:
            _require(0 <= self.displacement < 1,
                     f"displacement target must lie in [0, 1), got {self.displacement}")


@dataclass(frozen=True)
class RawShocks:
    """Shock values as stated before calibration, kept for gap reporting."""

    robotics_growth: float | None = None
    cost_ratio: float | None = None

    def __post_init__(self) -> None:
        if self.robotics_growth is not None:
            _require(self.robotics_growth > -1,
                     f"raw robotics_growth must exceed -1, got {self.robotics_growth}")
        if self.cost_ratio is not None:
            _require(self.cost_ratio > 0,
                     f"raw cost_ratio must be positive, got {self.cost_ratio}")


Path = Union[float, tuple]


@dataclass(frozen=True)
class Scenario:
    """One simulation case: shocks, overrides and reporting metadata.

    Shock paths may be scalars (applied every year) or sequences with one
    entry per horizon year. ``cost_ratio_path`` entries are cumulative
    wage-to-robot-cost ratios relative to the baseline year, not
    year-over-year increments.
    """

    name: str
    mode: SimulationMode
    horizon: tuple[int, int]
    robotics_growth: float | tuple[float, ...] = 0.0
    cost_ratio_path: float | tuple[float, ...] = 1.0
    sigma_override: float | None = None
    theta_override: ThetaMode | None = None
    exposure_override: float | None = None
    tfp_enabled: bool = False
    job_creation_model: JobCreationModel = field(default_factory=JobCreationRatio)
    key_driver: str = ""
    targets: TargetSet | None = None
    raw_shocks: RawShocks | None = None

    def __post_init__(self) -> None:
        _require(bool(_NAME_RE.match(self.name)),
                 f"scenario name must match [A-Za-z0-9_-]+, got {self.name!r}")
        mode = SimulationMode(self.mode)
        object.__setattr__(self, "mode", mode)
        horizon = tuple(self.horizon)
        _require(len(horizon) == 2, "horizon must be a (start, end) pair")
        start, end = horizon
        _require(float(start).is_integer() and float(end).is_integer(),
                 f"horizon years must be integers, got {horizon}")
        start, end = int(start), int(end)
        _require(YEAR_MIN <= start <= end <= YEAR_MAX,
                 f"horizon must satisfy {YEAR_MIN} <= start <= end <= {YEAR_MAX}, "
                 f"got {horizon}")
        object.__setattr__(self, "horizon", (start, end))
        if mode is SimulationMode.COMPARATIVE_STATIC:
            _require(start == end,
                     "comparative_static scenarios take a single-year horizon")
        n_years = end - start + 1
        growth = self.robotics_growth
        if isinstance(growth, (tuple, list)):
            growth = tuple(float(g) for g in growth)
            _require(len(growth) == n_years,
                     f"robotics_growth path needs {n_years} entries, got {len(growth)}")
            object.__setattr__(self, "robotics_growth", growth)
            values = growth
        else:
            values = (float(growth),)
        for g in values:
            _require(g > -1, f"robotics_growth must exceed -1, got {g}")
        ratios = self.cost_ratio_path
        if isinstance(ratios, (tuple, list)):
            ratios = tuple(float(r) for r in ratios)
            _require(len(ratios) == n_years,
                     f"cost_ratio_path needs {n_years} entries, got {len(ratios)}")
            object.__setattr__(self, "cost_ratio_path", ratios)
            values = ratios
        else:
            values = (float(ratios),)
        for r in values:
            _require(r > 0, f"cost_ratio_path entries must be positive, got {r}")
        if self.sigma_override is not None:
            _require(self.sigma_override >= 0,
                     f"sigma_override must be >= 0, got {self.sigma_override}")
        if self.theta_override is not None:
            _require(isinstance(self.theta_override, (StaticTheta, ThetaRamp)),
                     "theta_override must be StaticTheta or ThetaRamp")
        if self.exposure_override is not None:
            _require(0 <= self.exposure_override <= 1,
                     f"exposure_override must lie in [0, 1], got {self.exposure_override}")
        _require(isinstance(self.job_creation_model, (JobCreationRatio, JobCreationRamp)),
                 "job_creation_model must be JobCreationRatio or JobCreationRamp")

    @property
    def n_years(self) -> int:
        return self.horizon[1] - self.horizon[0] + 1

    def growth_path(self) -> tuple[float, ...]:
        if isinstance(self.robotics_growth, tuple):
            return self.robotics_growth
        return (float(self.robotics_growth),) * self.n_years

    def cost_path(self) -> tuple[float, ...]:
        if isinstance(self.cost_ratio_path, tuple):
            return self.cost_ratio_path
        return (float(self.cost_ratio_path),) * self.n_years


@dataclass(frozen=True)
class YearRecord:
    """State of one simulated year."""

    year: int
    theta: float
    tfp: float
    output: float
    output_gain_vs_baseline: float
    labor: float
    displacement_rate: float
    displaced_cumulative: float
    jobs_created_cumulative: float
    remittance_low: float
    remittance_high: float

    def __post_init__(self) -> None:
        _require(0 < self.theta <= 1, f"theta must lie in (0, 1], got {self.theta}")
        _require(self.tfp > 0, f"tfp must be positive, got {self.tfp}")
        _require(self.output > 0, f"output must be positive, got {self.output}")
        _require(self.labor > 0, f"labor must be positive, got {self.labor}")
        _require(0 <= self.displacement_rate <= 1,
                 f"displacement_rate must lie in [0, 1], got {self.displacement_rate}")
        _require(self.displaced_cumulative >= 0,
                 f"displaced_cumulative must be >= 0, got {self.displaced_cumulative}")
        _require(self.jobs_created_cumulative >= 0,
                 f"jobs_created_cumulative must be >= 0, "
                 f"got {self.jobs_created_cumulative}")


@dataclass(frozen=True)
class ResultSummary:
    """Terminal metrics of one scenario run."""

    gdp_gain: float
    realized_gain: float
    displacement_rate: float
    displaced_total: float
    jobs_created: float
    key_driver: str = ""
    raw_gdp_gain: float | None = None
    raw_displacement_rate: float | None = None


@dataclass(frozen=True)
class TargetGap:
    """Computed-versus-target comparison for one metric."""

    metric: str
    target: float
    computed: float
    gap: float
    raw_computed: float | None = None
    raw_gap: float | None = None


@dataclass(frozen=True)
class SimulationResult:
    """Everything a scenario run produced."""

    scenario: str
    mode: SimulationMode
    records: tuple[YearRecord, ...]
    summary: ResultSummary
    sector_rates: dict[str, float]
    headcounts: HeadcountBreakdown
    targets: TargetSet | None = None
    target_comparison: tuple[TargetGap, ...] | None = None

    def __post_init__(self) -> None:
        _require(len(self.records) > 0, "a result needs at least one record")
        previous = None
        for record in self.records:
            if previous is not None:
                _require(record.displaced_cumulative >= previous.displaced_cumulative,
                         f"displaced_cumulative decreases in {record.year}; "
                         f"cost_ratio_path must not fall over the horizon")
            previous = record


def _simulate(scenario: Scenario, params: ModelParams, state0: EconomyState,
              baseline: LaborBaseline,
              sectors: Sequence[SectorProfile] | None) -> SimulationResult:
    sigma = scenario.sigma_override if scenario.sigma_override is not None else params.sigma
    theta_mode = scenario.theta_override if scenario.theta_override is not None else params.theta
    exposure = (scenario.exposure_override if scenario.exposure_override is not None
                else params.exposure_share)
    for value in ((theta_mode.value,) if isinstance(theta_mode, StaticTheta)
                  else (theta_mode.start, theta_mode.end)):
        _require(params.alpha + value < 1,
                 f"alpha + theta must stay below 1, got {params.alpha} + {value}")

    start, end = scenario.horizon
    n_years = scenario.n_years
    growth = scenario.growth_path()
    cost = scenario.cost_path()
    boost = params.tfp_boost_per_adoption_pct

    tfp = state0.tfp
    robotics = state0.robotics
    labor0 = state0.labor
    records: list[YearRecord] = []
    for index in range(n_years):
        year = start + index
        theta_t = theta_at(index, theta_mode)
        _require(1.0 - params.alpha - theta_t > 0,
                 f"labor exponent turns nonpositive in {year} "
                 f"(alpha={params.alpha}, theta={theta_t})")
        g_t = growth[index]
        r_t = cost[index]
        robotics = robotics * (1.0 + g_t)
        if scenario.tfp_enabled:
            tfp = tfp_step(tfp, 100.0 * g_t, boost)
        ratio = labor_demand_ratio(r_t, sigma, exposure)
        labor_t = labor0 * ratio
        displacement_rate = 1.0 - ratio
        displaced = labor0 - labor_t
        state_t = EconomyState(year=year, tfp=tfp, capital=state0.capital,
                               labor=labor_t, robotics=robotics,
                               wage=state0.wage, robot_cost=state0.robot_cost / r_t)
        output_t = production_output(state_t, params.alpha, theta_t)
        base_t = production_output(state0, params.alpha, theta_t)
        progress = index / (n_years - 1) if n_years > 1 else 1.0
        jobs = job_creation(displaced, scenario.job_creation_model, progress=progress)
        remit_low, remit_high = remittance_impact(displacement_rate, baseline)
        records.append(YearRecord(
            year=year,
            theta=theta_t,
            tfp=tfp,
            output=output_t,
            output_gain_vs_baseline=output_t / base_t - 1.0,
            labor=labor_t,
            displacement_rate=displacement_rate,
            displaced_cumulative=displaced,
            jobs_created_cumulative=jobs,
            remittance_low=remit_low,
            remittance_high=remit_high,
        ))

    terminal = records[-1]
    # channel gain: robotics stock and TFP moved, labor held at baseline
    channel_gain = ((tfp / state0.tfp)
                    * (robotics / state0.robotics) ** terminal.theta - 1.0)
    raw_gain = None
    raw_disp = None
    if scenario.raw_shocks is not None:
        theta0 = theta_at(0, theta_mode)
        if scenario.raw_shocks.robotics_growth is not None:
            g_raw = scenario.raw_shocks.robotics_growth
            factor = 1.0 + boost * 100.0 * g_raw if scenario.tfp_enabled else 1.0
            raw_gain = factor * (1.0 + g_raw) ** theta0 - 1.0
        if scenario.raw_shocks.cost_ratio is not None:
            # raw displacement at full exposure: the exposure share is itself
            # a calibrated quantity
            raw_disp = 1.0 - labor_demand_ratio(scenario.raw_shocks.cost_ratio,
                                                sigma, 1.0)
    summary = ResultSummary(
        gdp_gain=channel_gain,
        realized_gain=terminal.output_gain_vs_baseline,
        displacement_rate=terminal.displacement_rate,
        displaced_total=terminal.displaced_cumulative,
        jobs_created=terminal.jobs_created_cumulative,
        key_driver=scenario.key_driver,
        raw_gdp_gain=raw_gain,
        raw_displacement_rate=raw_disp,
    )
    sector_rates = (disaggregate_displacement(terminal.displacement_rate, sectors)
                    if sectors else {})
    headcounts = displacement_headcounts(terminal.displacement_rate, baseline)
    result = SimulationResult(
        scenario=scenario.name,
        mode=scenario.mode,
        records=tuple(records),
        summary=summary,
        sector_rates=sector_rates,
        headcounts=headcounts,
        targets=scenario.targets,
    )
    if scenario.targets is not None:
        result = replace(result, target_comparison=compare_to_targets(result))
    return result


def run_comparative_static(scenario: Scenario, params: ModelParams,
                           state0: EconomyState, baseline: LaborBaseline,
                           sectors: Sequence[SectorProfile] | None = None
                           ) -> SimulationResult:
    """Apply a one-shot shock and report the new equilibrium.

    The scenario must carry ``mode=comparative_static`` and a single-year
    horizon; the run is exactly a one-year dynamic simulation.
    """
    _require(scenario.mode is SimulationMode.COMPARATIVE_STATIC,
             f"scenario {scenario.name!r} is not comparative_static")
    return _simulate(scenario, params, state0, baseline, sectors)


def run_dynamic(scenario: Scenario, params: ModelParams, state0: EconomyState,
                baseline: LaborBaseline,
                sectors: Sequence[SectorProfile] | None = None) -> SimulationResult:
    """Walk the horizon year by year, compounding stocks and TFP.

    The robotics stock compounds by the per-year growth path, TFP compounds
    by the adoption spillover when enabled, the elasticity follows its
    schedule, and labor demand prices off the cumulative cost ratio. Yields
    one record per horizon year.
    """
    _require(scenario.mode is SimulationMode.DYNAMIC,
             f"scenario {scenario.name!r} is not dynamic")
    return _simulate(scenario, params, state0, baseline, sectors)


def run_scenario(scenario: Scenario, params: ModelParams, state0: EconomyState,
                 baseline: LaborBaseline,
                 sectors: Sequence[SectorProfile] | None = None) -> SimulationResult:
    """Dispatch on the scenario mode."""
    if scenario.mode is SimulationMode.COMPARATIVE_STATIC:
        return run_comparative_static(scenario, params, state0, baseline, sectors)
    return run_dynamic(scenario, params, state0, baseline, sectors)


def compare_to_targets(result: SimulationResult) -> tuple[TargetGap, ...]:
    """Gap of each computed summary metric against the scenario targets.

    Pure function of the result; records are never touched. Raw shock
    metrics ride along when the scenario stated them.
    """
    targets = result.targets
    if targets is None:
        return ()
    gaps: list[TargetGap] = []
    summary = result.summary
    if targets.gdp_gain is not None:
        raw = summary.raw_gdp_gain
        gaps.append(TargetGap(
            metric="gdp_gain",
            target=targets.gdp_gain,
            computed=summary.gdp_gain,
            gap=summary.gdp_gain - targets.gdp_gain,
            raw_computed=raw,
            raw_gap=None if raw is None else raw - targets.gdp_gain,
        ))
    if targets.displacement is not None:
        raw = summary.raw_displacement_rate
        gaps.append(TargetGap(
            metric="displacement",
            target=targets.displacement,
            computed=summary.displacement_rate,
            gap=summary.displacement_rate - targets.displacement,
            raw_computed=raw,
            raw_gap=None if raw is None else raw - targets.displacement,
        ))
    return tuple(gaps)
