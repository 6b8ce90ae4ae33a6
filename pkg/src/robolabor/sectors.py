"""Sector disaggregation, headcount accounting and downstream impacts.

A national displacement rate is split across sectors by relative risk
multipliers, headcounts follow the workforce composition, and two downstream
channels are quantified: foregone remittance outflows and offsetting job
creation in robot maintenance, programming and supervision roles.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

from .errors import DomainError, UnattainableTargetError

__all__ = [
    "Readiness",
    "SectorProfile",
    "LaborBaseline",
    "HeadcountBreakdown",
    "JobCreationRatio",
    "JobCreationRamp",
    "JobCreationModel",
    "disaggregate_displacement",
    "displacement_headcounts",
    "remittance_impact",
    "job_creation",
    "round_half_away",
]

# employment-weighted sector rates must recover the national rate this closely
MEAN_TOLERANCE = 1e-9


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


class Readiness(str, enum.Enum):
    """Qualitative automation readiness of a sector."""

    LOW = "low"
    MODERATE = "moderate"
    HIGH = "high"


@dataclass(frozen=True)
class SectorProfile:
    """Automation characteristics of one sector.

    Parameters
    ----------
    name : str
        Sector identifier, unique within a dataset.
    employment_share : float
        Share of total employment, in [0, 1].
    risk_multiplier : float or None
        Ratio of the sector displacement rate to the national rate. ``None``
        is required for (and only for) the residual sector, whose rate is
        computed to absorb slack.
    automation_potential : float
        Cap on the sector displacement rate, in [0, 1].
    readiness : Readiness
        Qualitative readiness class.
    readiness_score : float or None
        Optional 0-10 numeric readiness score.
    residual : bool
        Marks the catch-all bucket for sectors not modeled explicitly.
    notes : str
        Key determinants, free text.
    """

    name: str
    employment_share: float
    risk_multiplier: float | None
    automation_potential: float
    readiness: Readiness
    readiness_score: float | None = None
    residual: bool = False
    notes: str = ""

    def __post_init__(self) -> None:
        _require(bool(self.name), "sector name must be nonempty")
        _require(0 <= self.employment_share <= 1,
                 f"{self.name}: employment_share must lie in [0, 1], "
                 f"got {self.employment_share}")
        if self.residual:
            _require(self.risk_multiplier is None,
                     f"{self.name}: residual sector must not carry a risk_multiplier")
            _require(self.employment_share > 0,
                     f"{self.name}: residual sector needs a positive employment_share")
        else:
            _require(self.risk_multiplier is not None,
                     f"{self.name}: risk_multiplier is required for non-residual sectors")
            _require(self.risk_multiplier >= 0,
                     f"{self.name}: risk_multiplier must be >= 0, got {self.risk_multiplier}")
        _require(0 <= self.automation_potential <= 1,
                 f"{self.name}: automation_potential must lie in [0, 1], "
                 f"got {self.automation_potential}")
        if not isinstance(self.readiness, Readiness):
            raise DomainError(f"{self.name}: readiness must be a Readiness value")
        if self.readiness_score is not None:
            _require(0 <= self.readiness_score <= 10,
                     f"{self.name}: readiness_score must lie in [0, 10], "
                     f"got {self.readiness_score}")


@dataclass(frozen=True)
class LaborBaseline:
    """Workforce composition and remittance facts for the baseline year."""

    total_labor_force: float
    expat_share: float
    sector_shares: Mapping[str, float]
    min_wage: float
    low_wage_headcount: float
    remittance_base: float
    remittance_decline_band: tuple[float, float] = (0.12, 0.18)
    remittance_reference_rate: float = 0.032

    def __post_init__(self) -> None:
        _require(self.total_labor_force > 0,
                 f"total_labor_force must be positive, got {self.total_labor_force}")
        _require(0 <= self.expat_share <= 1,
                 f"expat_share must lie in [0, 1], got {self.expat_share}")
        shares = dict(self.sector_shares)
        object.__setattr__(self, "sector_shares", shares)
        total = 0.0
        for name, share in shares.items():
            _require(0 <= share <= 1,
                     f"sector_shares[{name}] must lie in [0, 1], got {share}")
            total += share
        _require(total <= 1 + 1e-9,
                 f"sector_shares must sum to at most 1, got {total}")
        _require(self.min_wage > 0, f"min_wage must be positive, got {self.min_wage}")
        _require(self.low_wage_headcount >= 0,
                 f"low_wage_headcount must be >= 0, got {self.low_wage_headcount}")
        _require(self.low_wage_headcount <= self.total_labor_force,
                 "low_wage_headcount cannot exceed total_labor_force")
        _require(self.remittance_base > 0,
                 f"remittance_base must be positive, got {self.remittance_base}")
        band = tuple(self.remittance_decline_band)
        object.__setattr__(self, "remittance_decline_band", band)
        _require(len(band) == 2, "remittance_decline_band needs exactly two entries")
        _require(0 <= band[0] <= band[1] <= 1,
                 f"remittance_decline_band must be ordered within [0, 1], got {band}")
        _require(self.remittance_reference_rate > 0,
                 "remittance_reference_rate must be positive, "
                 f"got {self.remittance_reference_rate}")


@dataclass(frozen=True)
class HeadcountBreakdown:
    """Displacement expressed in workers."""

    total: float
    expat: float
    by_sector: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "by_sector", dict(self.by_sector))


def disaggregate_displacement(national_rate: float,
                              sectors: Sequence[SectorProfile]) -> dict[str, float]:
    """Split a national displacement rate into per-sector rates.

    Named sectors get ``national_rate * risk_multiplier``, capped at their
    automation potential. The residual sector, when present, absorbs the
    slack so the employment-weighted mean of sector rates equals the
    national rate. If caps bind (including on the residual), the remaining
    unclamped sectors are rescaled proportionally; when every sector is
    pinned at its cap and the national rate still cannot be reached, the
    target is unattainable and an error is raised.

    Returns rates keyed by sector name, in dataset order.
    """
    _require(0 <= national_rate <= 1,
             f"national_rate must lie in [0, 1], got {national_rate}")
    _require(len(sectors) > 0, "sector dataset must be nonempty")
    names = [s.name for s in sectors]
    _require(len(set(names)) == len(names), "sector names must be unique")
    residuals = [s for s in sectors if s.residual]
    _require(len(residuals) <= 1, "at most one residual sector is allowed")
    total_weight = sum(s.employment_share for s in sectors)
    _require(total_weight > 0, "sector dataset has zero total employment share")
    _require(total_weight <= 1 + 1e-9,
             f"employment shares must sum to at most 1, got {total_weight}")

    target_sum = national_rate * total_weight
    rates = {s.name: min(national_rate * (s.risk_multiplier or 0.0),
                         s.automation_potential)
             for s in sectors if not s.residual}

    residual = residuals[0] if residuals else None
    if residual is not None:
        named_sum = sum(s.employment_share * rates[s.name]
                        for s in sectors if not s.residual)
        raw = (target_sum - named_sum) / residual.employment_share
        rates[residual.name] = min(max(raw, 0.0), residual.automation_potential)

    def weighted_sum() -> float:
        return sum(s.employment_share * rates[s.name] for s in sectors)

    # if the residual clamped (or there is none) rescale the sectors that can
    # still move; repeat because rescaling may push new sectors onto their caps
    for _ in range(len(sectors) + 1):
        deficit = target_sum - weighted_sum()
        if abs(deficit) <= MEAN_TOLERANCE * max(1.0, target_sum):
            break
        if deficit > 0:
            # only rates strictly between 0 and the cap can scale upward
            free = [s for s in sectors
                    if 0 < rates[s.name] < s.automation_potential]
        else:
            free = [s for s in sectors if rates[s.name] > 0]
        free_sum = sum(s.employment_share * rates[s.name] for s in free)
        if not free or free_sum == 0:
            raise UnattainableTargetError(
                f"national rate {national_rate} is unattainable: every sector "
                f"is pinned at its automation_potential cap")
        scale = (free_sum + deficit) / free_sum
        for s in free:
            rates[s.name] = min(max(rates[s.name] * scale, 0.0),
                                s.automation_potential)
    else:
        raise UnattainableTargetError(
            f"national rate {national_rate} is unattainable under the "
            f"automation_potential caps")
    return {s.name: rates[s.name] for s in sectors}


def displacement_headcounts(national_rate: float,
                            baseline: LaborBaseline) -> HeadcountBreakdown:
    """Convert a displacement rate into worker headcounts.

    Total displaced workers, the expatriate slice, and per-sector counts of
    displaced expatriates following the baseline sector shares. Values are
    exact products; use :func:`round_half_away` for presentation.
    """
    _require(0 <= national_rate <= 1,
             f"national_rate must lie in [0, 1], got {national_rate}")
    total = national_rate * baseline.total_labor_force
    expat = total * baseline.expat_share
    by_sector = {name: expat * share
                 for name, share in baseline.sector_shares.items()}
    return HeadcountBreakdown(total=total, expat=expat, by_sector=by_sector)


def remittance_impact(displacement_rate: float, baseline: LaborBaseline,
                      decline_band: tuple[float, float] | None = None,
                      reference_rate: float | None = None) -> tuple[float, float]:
    """Annual remittance outflow reduction band for a displacement rate.

    The published decline band applies at the reference displacement rate
    and scales linearly with the actual rate:

        impact = remittance_base * band * (rate / reference_rate)

    Returns the (low, high) bounds in the remittance base currency. At the
    reference rate the band applies exactly.
    """
    _require(0 <= displacement_rate <= 1,
             f"displacement_rate must lie in [0, 1], got {displacement_rate}")
    band = decline_band if decline_band is not None else baseline.remittance_decline_band
    reference = (reference_rate if reference_rate is not None
                 else baseline.remittance_reference_rate)
    _require(len(band) == 2 and 0 <= band[0] <= band[1] <= 1,
             f"decline band must be ordered within [0, 1], got {band}")
    _require(reference > 0, f"reference_rate must be positive, got {reference}")
    scale = displacement_rate / reference
    return (baseline.remittance_base * band[0] * scale,
            baseline.remittance_base * band[1] * scale)


@dataclass(frozen=True)
class JobCreationRatio:
    """Jobs created as a fixed ratio of cumulative displacement."""

    ratio: float = 0.23

    def __post_init__(self) -> None:
        _require(self.ratio >= 0, f"ratio must be >= 0, got {self.ratio}")


@dataclass(frozen=True)
class JobCreationRamp:
    """Creation ratio ramping linearly from 0 to ``terminal_ratio``.

    The ramp position is the fraction of the horizon elapsed; a degenerate
    single-year horizon uses the terminal ratio.
    """

    terminal_ratio: float = 0.64

    def __post_init__(self) -> None:
        _require(self.terminal_ratio >= 0,
                 f"terminal_ratio must be >= 0, got {self.terminal_ratio}")


JobCreationModel = Union[JobCreationRatio, JobCreationRamp]


def job_creation(displaced_cumulative: float, model: JobCreationModel,
                 progress: float = 1.0) -> float:
    """Cumulative jobs created in automation-adjacent roles.

    ``progress`` is the elapsed fraction of the horizon in [0, 1]; ratio
    models ignore it, ramp models scale their terminal ratio by it.
    """
    _require(displaced_cumulative >= 0,
             f"displaced_cumulative must be >= 0, got {displaced_cumulative}")
    _require(0 <= progress <= 1, f"progress must lie in [0, 1], got {progress}")
    if isinstance(model, JobCreationRatio):
        return model.ratio * displaced_cumulative
    if isinstance(model, JobCreationRamp):
        return model.terminal_ratio * progress * displaced_cumulative
    raise DomainError(
        f"model must be JobCreationRatio or JobCreationRamp, got {type(model).__name__}")


def round_half_away(value: float) -> int:
    """Round to the nearest integer with halves away from zero.

    Presentation helper for headcounts; internal arithmetic stays exact.
    """
    return int(math.floor(value + 0.5)) if value >= 0 else -int(math.floor(-value + 0.5))
