"""Solvers that recover unstated inputs from published outcomes.

Closed forms exist for every single-parameter inversion of the model (theta
from an output gain, sigma from a displacement rate, the exposure share or
cost ratio from a displacement target, TFP from an observed output level).
Those are preferred. A deterministic midpoint bisection is kept for
composite targets where several channels interact, such as backing out an
adoption rate that reproduces a gain with the TFP spillover switched on.

All solves are in ratio space: targets are fractional changes against the
frozen baseline year.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import (
    DomainError,
    MaxIterationsError,
    NoSignChangeError,
    UnattainableTargetError,
)

__all__ = [
    "SolverConfig",
    "CalibrationReport",
    "bisect",
    "solve_tfp_level",
    "implied_theta",
    "implied_sigma",
    "implied_exposure",
    "implied_cost_ratio",
    "implied_robotics_growth",
]

RATIO_SPACE_NOTE = (
    "all calibration is performed in ratio space: targets are fractional "
    "changes against the frozen baseline year"
)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


@dataclass(frozen=True)
class SolverConfig:
    """Bracket and stopping rule for :func:`bisect`."""

    lo: float
    hi: float
    relative_tolerance: float = 1e-10
    max_iterations: int = 200

    def __post_init__(self) -> None:
        _require(self.lo < self.hi,
                 f"bracket must satisfy lo < hi, got [{self.lo}, {self.hi}]")
        _require(self.relative_tolerance > 0,
                 f"relative_tolerance must be positive, got {self.relative_tolerance}")
        _require(self.max_iterations >= 1,
                 f"max_iterations must be >= 1, got {self.max_iterations}")


@dataclass(frozen=True)
class CalibrationReport:
    """Record of one solve, serializable for the calibration output file."""

    target_name: str
    target_value: float
    parameter: str
    value: float
    residual: float
    iterations: int

    def to_dict(self) -> dict:
        return {
            "target_name": self.target_name,
            "target_value": self.target_value,
            "parameter": self.parameter,
            "value": self.value,
            "residual": self.residual,
            "iterations": self.iterations,
        }


def bisect(f: Callable[[float], float], target: float, config: SolverConfig) -> float:
    """Solve ``f(x) = target`` on the configured bracket by midpoint bisection.

    Stops when ``|f(x) - target| <= relative_tolerance * max(1, |target|)``.
    Midpoints are exact float midpoints, so the iterate sequence is
    deterministic for a given bracket.

    Raises
    ------
    NoSignChangeError
        If ``f - target`` has the same sign at both bracket ends.
    MaxIterationsError
        If the tolerance is not met within ``max_iterations``; the error
        carries the best iterate seen.
    """
    tol = config.relative_tolerance * max(1.0, abs(target))
    lo, hi = config.lo, config.hi
    flo = f(lo) - target
    fhi = f(hi) - target
    if abs(flo) <= tol:
        return lo
    if abs(fhi) <= tol:
        return hi
    if (flo > 0) == (fhi > 0):
        raise NoSignChangeError(
            f"f - target has the same sign at both ends of [{lo}, {hi}]: "
            f"{flo:.6g} and {fhi:.6g}")
    best_x, best_res = lo, abs(flo)
    if abs(fhi) < best_res:
        best_x, best_res = hi, abs(fhi)
    for iteration in range(1, config.max_iterations + 1):
        mid = 0.5 * (lo + hi)
        fmid = f(mid) - target
        if abs(fmid) < best_res:
            best_x, best_res = mid, abs(fmid)
        if abs(fmid) <= tol:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    raise MaxIterationsError(
        f"no convergence in {config.max_iterations} iterations; "
        f"best iterate {best_x:.12g} with residual {best_res:.6g}",
        best_x=best_x, best_residual=best_res, iterations=config.max_iterations)


def solve_tfp_level(observed_output: float, capital: float, labor: float,
                    robotics: float, alpha: float, theta: float) -> float:
    """TFP level consistent with an observed output and factor quantities.

    Inverts the production function directly:
    ``A = Y / (K**alpha * L**(1-alpha-theta) * R**theta)``.
    """
    _require(observed_output > 0,
             f"observed_output must be positive, got {observed_output}")
    for name, value in (("capital", capital), ("labor", labor), ("robotics", robotics)):
        _require(value > 0, f"{name} must be positive, got {value}")
    _require(0 < alpha < 1, f"alpha must lie in (0, 1), got {alpha}")
    _require(0 < theta <= 1, f"theta must lie in (0, 1], got {theta}")
    labor_exponent = 1.0 - alpha - theta
    _require(labor_exponent > 0,
             f"labor exponent 1 - alpha - theta must be positive, got {labor_exponent}")
    return observed_output / (
        capital ** alpha * labor ** labor_exponent * robotics ** theta)


def implied_theta(output_gain: float, robotics_growth: float) -> float:
    """Robotics elasticity that maps a stock growth rate into an output gain.

    Inverts ``(1+g)**theta - 1 = gain``:
    ``theta = ln(1 + gain) / ln(1 + g)``. A zero gain returns exactly 0.0.
    """
    _require(output_gain > -1, f"output_gain must exceed -1, got {output_gain}")
    _require(robotics_growth > -1,
             f"robotics_growth must exceed -1, got {robotics_growth}")
    _require(robotics_growth != 0, "robotics_growth must be nonzero")
    if output_gain == 0:
        return 0.0
    return math.log1p(output_gain) / math.log1p(robotics_growth)


def implied_sigma(displacement: float, cost_ratio_change: float) -> float:
    """Substitution elasticity that yields a displacement rate at full exposure.

    Inverts ``1 - r**(-sigma) = d``: ``sigma = -ln(1 - d) / ln(r)``.
    """
    _require(0 <= displacement < 1,
             f"displacement must lie in [0, 1), got {displacement}")
    _require(cost_ratio_change > 0,
             f"cost_ratio_change must be positive, got {cost_ratio_change}")
    _require(cost_ratio_change != 1, "cost_ratio_change must differ from 1")
    return -math.log1p(-displacement) / math.log(cost_ratio_change)


def implied_exposure(displacement_target: float, cost_ratio_change: float,
                     sigma: float) -> float:
    """Exposure share that scales the substitution response to a target rate.

    Solves ``exposure * (1 - r**(-sigma)) = target``. Raises
    :class:`UnattainableTargetError` when even full exposure falls short.
    """
    _require(0 <= displacement_target < 1,
             f"displacement_target must lie in [0, 1), got {displacement_target}")
    _require(cost_ratio_change > 1,
             f"cost_ratio_change must exceed 1, got {cost_ratio_change}")
    _require(sigma > 0, f"sigma must be positive, got {sigma}")
    if displacement_target == 0:
        return 0.0
    response = 1.0 - cost_ratio_change ** (-sigma)
    exposure = displacement_target / response
    if exposure > 1.0:
        raise UnattainableTargetError(
            f"displacement target {displacement_target} needs exposure "
            f"{exposure:.6g} > 1 at cost ratio {cost_ratio_change}, sigma {sigma}")
    return exposure


def implied_cost_ratio(displacement_target: float, sigma: float,
                       exposure_share: float = 1.0) -> float:
    """Cost-ratio change that produces a displacement target.

    Solves ``exposure * (1 - r**(-sigma)) = target`` for ``r``:
    ``r = (1 - target/exposure)**(-1/sigma)``.
    """
    _require(0 <= displacement_target < 1,
             f"displacement_target must lie in [0, 1), got {displacement_target}")
    _require(sigma > 0, f"sigma must be positive, got {sigma}")
    _require(0 < exposure_share <= 1,
             f"exposure_share must lie in (0, 1], got {exposure_share}")
    if displacement_target == 0:
        return 1.0
    if displacement_target >= exposure_share:
        raise UnattainableTargetError(
            f"displacement target {displacement_target} is out of reach for "
            f"exposure share {exposure_share}")
    return (1.0 - displacement_target / exposure_share) ** (-1.0 / sigma)


def implied_robotics_growth(gain_target: float, theta: float,
                            tfp_boost_per_pct: float = 0.0,
                            solver: SolverConfig | None = None) -> float:
    """Adoption growth rate that reproduces an output-gain target.

    With the TFP spillover off this inverts the power law directly:
    ``g = (1 + gain)**(1/theta) - 1``. With the spillover on, the gain is
    ``(1 + boost * 100g) * (1+g)**theta - 1``, a composite of two channels,
    and the solve falls back to bisection.
    """
    _require(gain_target > -1, f"gain_target must exceed -1, got {gain_target}")
    _require(0 < theta <= 1, f"theta must lie in (0, 1], got {theta}")
    _require(tfp_boost_per_pct >= 0,
             f"tfp_boost_per_pct must be >= 0, got {tfp_boost_per_pct}")
    if tfp_boost_per_pct == 0:
        return (1.0 + gain_target) ** (1.0 / theta) - 1.0

    def forward(g: float) -> float:
        return (1.0 + tfp_boost_per_pct * 100.0 * g) * (1.0 + g) ** theta - 1.0

    if solver is None:
        solver = SolverConfig(lo=0.0, hi=1.0)
    return bisect(forward, gain_target, solver)
