"""Core production and labor-demand primitives.

The model is a capital-augmenting Cobb-Douglas economy where robotics capital
enters as a third factor:

    Y = A * K**alpha * L**(1 - alpha - theta) * R**theta

``A`` is total factor productivity, ``K`` physical capital, ``L`` labor and
``R`` the robotics capital stock. Exponents sum to one, so the function has
constant returns to scale in the three factors. Labor demand responds to the
cost of robots relative to wages through a constant substitution elasticity,
with an exposure share bounding how much of the workforce competes with
automation at all.

Everything in this module is scalar and pure. State is carried in frozen
dataclasses; all validation happens eagerly at construction or call time and
raises :class:`~robolabor.errors.DomainError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import DomainError

__all__ = [
    "EconomyState",
    "StaticTheta",
    "ThetaRamp",
    "ThetaMode",
    "ModelParams",
    "production_output",
    "robotics_output_gain",
    "labor_demand_ratio",
    "theta_at",
    "tfp_step",
]

YEAR_MIN = 2019
YEAR_MAX = 2100


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


def _require_integer(value: float, name: str) -> int:
    try:
        ok = float(value).is_integer()
    except (TypeError, OverflowError):
        ok = False
    if not ok:
        raise DomainError(f"{name} must be an integer, got {value!r}")
    return int(value)


@dataclass(frozen=True)
class EconomyState:
    """Snapshot of the economy in one year.

    Factor quantities are in ratio space (baseline year = 1.0) except labor,
    which is carried in workers so displacement converts to headcounts
    directly. Wage and robot cost are levels in local currency.
    """

    year: int
    tfp: float
    capital: float
    labor: float
    robotics: float
    wage: float
    robot_cost: float

    def __post_init__(self) -> None:
        year = _require_integer(self.year, "year")
        object.__setattr__(self, "year", year)
        _require(YEAR_MIN <= year <= YEAR_MAX,
                 f"year must lie in [{YEAR_MIN}, {YEAR_MAX}], got {year}")
        for name in ("tfp", "capital", "labor", "robotics", "wage", "robot_cost"):
            value = getattr(self, name)
            _require(value > 0, f"{name} must be positive, got {value}")


@dataclass(frozen=True)
class StaticTheta:
    """Constant robotics output elasticity."""

    value: float

    def __post_init__(self) -> None:
        _require(0 < self.value <= 1,
                 f"theta must lie in (0, 1], got {self.value}")


@dataclass(frozen=True)
class ThetaRamp:
    """Robotics output elasticity ramping linearly over ``ramp_years`` years.

    The schedule evaluates to ``start`` at year index 0, interpolates
    linearly, and holds ``end`` from index ``ramp_years`` onward.
    """

    start: float
    end: float
    ramp_years: int

    def __post_init__(self) -> None:
        ramp_years = _require_integer(self.ramp_years, "ramp_years")
        object.__setattr__(self, "ramp_years", ramp_years)
        _require(ramp_years >= 1, f"ramp_years must be >= 1, got {ramp_years}")
        for name in ("start", "end"):
            value = getattr(self, name)
            _require(0 < value <= 1, f"theta {name} must lie in (0, 1], got {value}")


ThetaMode = Union[StaticTheta, ThetaRamp]


def _theta_extremes(theta: ThetaMode) -> tuple[float, ...]:
    # linear schedule, so checking the endpoints covers every year
    if isinstance(theta, StaticTheta):
        return (theta.value,)
    return (theta.start, theta.end)


@dataclass(frozen=True)
class ModelParams:
    """Structural parameters of the model.

    Parameters
    ----------
    alpha : float
        Capital output elasticity, in (0, 1).
    theta : StaticTheta or ThetaRamp
        Robotics output elasticity schedule. Every value the schedule can
        take must keep the labor exponent ``1 - alpha - theta`` positive.
    sigma : float
        Elasticity of labor-robot substitution, >= 0.
    tfp_boost_per_adoption_pct : float
        Fractional TFP gain per percentage point of robotics stock growth.
    exposure_share : float
        Share of the workforce exposed to automation, in [0, 1].
    """

    alpha: float
    theta: ThetaMode
    sigma: float
    tfp_boost_per_adoption_pct: float = 0.002
    exposure_share: float = 1.0

    def __post_init__(self) -> None:
        _require(0 < self.alpha < 1, f"alpha must lie in (0, 1), got {self.alpha}")
        if not isinstance(self.theta, (StaticTheta, ThetaRamp)):
            raise DomainError(
                f"theta must be StaticTheta or ThetaRamp, got {type(self.theta).__name__}")
        for value in _theta_extremes(self.theta):
            _require(self.alpha + value < 1,
                     f"alpha + theta must stay below 1, got {self.alpha} + {value}")
        _require(self.sigma >= 0, f"sigma must be >= 0, got {self.sigma}")
        _require(self.tfp_boost_per_adoption_pct >= 0,
                 f"tfp_boost_per_adoption_pct must be >= 0, got {self.tfp_boost_per_adoption_pct}")
        _require(0 <= self.exposure_share <= 1,
                 f"exposure_share must lie in [0, 1], got {self.exposure_share}")


def production_output(state: EconomyState, alpha: float, theta: float) -> float:
    """Evaluate ``A * K**alpha * L**(1-alpha-theta) * R**theta``.

    Parameters
    ----------
    state : EconomyState
        Factor quantities and TFP level.
    alpha, theta : float
        Capital and robotics output elasticities. Must satisfy
        ``0 < alpha < 1``, ``0 < theta <= 1`` and ``alpha + theta < 1`` so
        the labor exponent stays positive.

    Returns
    -------
    float
        Output in the same units as ``state.tfp`` times factor powers.
    """
    _require(0 < alpha < 1, f"alpha must lie in (0, 1), got {alpha}")
    _require(0 < theta <= 1, f"theta must lie in (0, 1], got {theta}")
    labor_exponent = 1.0 - alpha - theta
    _require(labor_exponent > 0,
             f"labor exponent 1 - alpha - theta must be positive, got {labor_exponent}")
    return (state.tfp
            * state.capital ** alpha
            * state.labor ** labor_exponent
            * state.robotics ** theta)


def robotics_output_gain(robotics_growth: float, theta: float) -> float:
    """Fractional output gain from robotics stock growth, other factors fixed.

    Equals ``(1 + robotics_growth)**theta - 1``, the comparative-static
    response of a Cobb-Douglas output to scaling one factor.
    """
    _require(robotics_growth > -1,
             f"robotics_growth must exceed -1, got {robotics_growth}")
    _require(0 < theta <= 1, f"theta must lie in (0, 1], got {theta}")
    return (1.0 + robotics_growth) ** theta - 1.0


def labor_demand_ratio(cost_ratio_change: float, sigma: float,
                       exposure_share: float = 1.0) -> float:
    """Surviving share of baseline labor demand after a robot-cost shift.

    ``cost_ratio_change`` is the wage-to-robot-cost ratio relative to its
    baseline value, so 1.0 means no change and values above 1.0 mean robots
    got relatively cheaper. The exposed slice of the workforce shrinks by the
    substitution response ``1 - cost_ratio_change**(-sigma)``; the rest is
    untouched:

        ratio = 1 - exposure_share * (1 - cost_ratio_change**(-sigma))

    At ``cost_ratio_change == 1`` the ratio is exactly 1.0.
    """
    _require(cost_ratio_change > 0,
             f"cost_ratio_change must be positive, got {cost_ratio_change}")
    _require(sigma >= 0, f"sigma must be >= 0, got {sigma}")
    _require(0 <= exposure_share <= 1,
             f"exposure_share must lie in [0, 1], got {exposure_share}")
    return 1.0 - exposure_share * (1.0 - cost_ratio_change ** (-sigma))


def theta_at(year_index: float, theta: ThetaMode) -> float:
    """Robotics elasticity at an integer year index into the horizon.

    Static schedules return their value everywhere. Ramp schedules return
    the exact ``start`` at index 0 and the exact ``end`` literal from
    ``ramp_years`` onward; intermediate indices interpolate linearly.
    """
    index = _require_integer(year_index, "year_index")
    _require(index >= 0, f"year_index must be >= 0, got {index}")
    if isinstance(theta, StaticTheta):
        return theta.value
    if not isinstance(theta, ThetaRamp):
        raise DomainError(
            f"theta must be StaticTheta or ThetaRamp, got {type(theta).__name__}")
    # clamp first: start + full step in floats need not reproduce the end literal
    if index >= theta.ramp_years:
        return theta.end
    if index == 0:
        return theta.start
    return theta.start + (theta.end - theta.start) * (index / theta.ramp_years)


def tfp_step(tfp_prev: float, adoption_growth_pct: float,
             boost_per_pct: float = 0.002) -> float:
    """Advance TFP one year given robotics adoption growth in percent.

    Returns ``tfp_prev * (1 + boost_per_pct * adoption_growth_pct)``. With
    the default boost, one percentage point of adoption growth lifts TFP by
    0.2 percent. Growth of zero returns ``tfp_prev`` unchanged.
    """
    _require(tfp_prev > 0, f"tfp_prev must be positive, got {tfp_prev}")
    _require(adoption_growth_pct >= 0,
             f"adoption_growth_pct must be >= 0, got {adoption_growth_pct}")
    _require(boost_per_pct >= 0, f"boost_per_pct must be >= 0, got {boost_per_pct}")
    return tfp_prev * (1.0 + boost_per_pct * adoption_growth_pct)
