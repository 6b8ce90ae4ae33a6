"""Command line interface.

Subcommands: ``simulate`` runs scenarios and writes result files,
``calibrate`` solves one parameter against a published target,
``sensitivity`` runs the one-at-a-time analysis, ``validate`` checks a
config and touches nothing.

Exit codes: 0 success, 1 config validation failure, 2 domain or solver
error, 64 usage error. Human-readable diagnostics go to stderr; data goes
to the output files and stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .calibrate import (
    CalibrationReport,
    SolverConfig,
    bisect,
    implied_cost_ratio,
    implied_exposure,
    implied_sigma,
    implied_theta,
    solve_tfp_level,
)
from .config import RunConfig, load_config
from .core import (
    EconomyState,
    labor_demand_ratio,
    production_output,
    robotics_output_gain,
    theta_at,
)
from .engine import run_scenario
from .errors import ModelError, ValidationError
from .report import (
    build_output_bundle,
    summary_table,
    write_outputs,
    write_sensitivity_csv,
)
from .sensitivity import default_specs, one_at_a_time

__all__ = ["cli_dispatch", "main"]

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_DOMAIN = 2
EXIT_USAGE = 64

_TARGET_NAMES = ("gain", "displacement", "output")
_SOLVE_NAMES = ("theta", "sigma", "exposure", "cost_ratio", "robotics_growth", "tfp")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # route argparse failures through our exit-code policy
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}\n{self.format_usage().rstrip()}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="robolabor",
                     description="Scenario engine for robotics-driven labor "
                                 "substitution in small open economies.")
    sub = parser.add_subparsers(dest="command", required=True)

    simulate = sub.add_parser("simulate", help="run scenarios and write result files")
    simulate.add_argument("--config", default="default",
                          help="config file path, or 'default' for the bundled dataset")
    simulate.add_argument("--scenario", default=None,
                          help="run only this scenario (default: all)")
    simulate.add_argument("--out", default=None,
                          help="output directory (default: config output.directory)")
    simulate.add_argument("--format", choices=("csv", "json", "both"), default=None,
                          help="file formats (default: config output.formats)")
    simulate.set_defaults(func=_cmd_simulate)

    calibrate = sub.add_parser("calibrate",
                               help="solve one parameter against a target outcome")
    calibrate.add_argument("--config", default="default")
    calibrate.add_argument("--target", required=True, metavar="NAME=VALUE",
                           help=f"target metric, one of {', '.join(_TARGET_NAMES)}")
    calibrate.add_argument("--solve", required=True, choices=_SOLVE_NAMES,
                           help="parameter to solve for")
    calibrate.add_argument("--scenario", default="baseline",
                           help="scenario supplying the shock context (default: baseline)")
    calibrate.set_defaults(func=_cmd_calibrate)

    sensitivity = sub.add_parser("sensitivity",
                                 help="one-at-a-time perturbation analysis")
    sensitivity.add_argument("--config", default="default")
    sensitivity.add_argument("--scenario", required=True)
    sensitivity.add_argument("--perturb", type=float, default=10.0, metavar="PCT",
                             help="perturbation size in percent (default: 10)")
    sensitivity.add_argument("--out", default=None,
                             help="also write sensitivity.csv to this directory")
    sensitivity.set_defaults(func=_cmd_sensitivity)

    validate = sub.add_parser("validate", help="check a config file and write nothing")
    validate.add_argument("--config", default="default")
    validate.set_defaults(func=_cmd_validate)

    return parser


def _cmd_simulate(args) -> int:
    config = load_config(args.config)
    if args.scenario is not None:
        scenarios = [config.scenario(args.scenario)]
    else:
        scenarios = list(config.scenarios)
    results = [run_scenario(s, config.params, config.initial_state,
                            config.baseline, config.sectors)
               for s in scenarios]
    bundle = build_output_bundle(config, results)
    if args.format is None:
        formats = config.output.formats
    elif args.format == "both":
        formats = ("csv", "json")
    else:
        formats = (args.format,)
    directory = args.out if args.out is not None else config.output.directory
    manifest = write_outputs(bundle, directory, formats)
    print(summary_table(results))
    for path in manifest:
        print(f"wrote {path}", file=sys.stderr)
    return EXIT_OK


def _parse_target(text: str) -> tuple[str, float]:
    name, sep, raw = text.partition("=")
    if not sep:
        raise _UsageError(f"--target expects NAME=VALUE, got {text!r}")
    name = name.strip()
    if name not in _TARGET_NAMES:
        raise _UsageError(
            f"--target name must be one of {', '.join(_TARGET_NAMES)}, got {name!r}")
    try:
        value = float(raw)
    except ValueError:
        raise _UsageError(f"--target value must be a number, got {raw!r}") from None
    return name, value


def _cmd_calibrate(args) -> int:
    config = load_config(args.config)
    target_name, target_value = _parse_target(args.target)
    scenario = config.scenario(args.scenario)
    params = config.params
    state = config.initial_state
    sigma = (scenario.sigma_override if scenario.sigma_override is not None
             else params.sigma)
    theta_mode = (scenario.theta_override if scenario.theta_override is not None
                  else params.theta)
    theta0 = theta_at(0, theta_mode)
    exposure = (scenario.exposure_override if scenario.exposure_override is not None
                else params.exposure_share)
    growth = scenario.growth_path()[0]
    ratio = scenario.cost_path()[0]
    boost = params.tfp_boost_per_adoption_pct if scenario.tfp_enabled else 0.0

    iterations = 0
    if target_name == "gain" and args.solve == "theta":
        value = implied_theta(target_value, growth)
        residual = robotics_output_gain(growth, value) - target_value
    elif target_name == "gain" and args.solve == "robotics_growth":
        calls = 0

        def forward(g: float) -> float:
            nonlocal calls
            calls += 1
            return (1.0 + boost * 100.0 * g) * (1.0 + g) ** theta0 - 1.0

        if boost == 0.0:
            value = (1.0 + target_value) ** (1.0 / theta0) - 1.0
        else:
            value = bisect(forward, target_value, SolverConfig(lo=0.0, hi=1.0))
            iterations = calls
        residual = forward(value) - target_value
    elif target_name == "displacement" and args.solve == "sigma":
        value = implied_sigma(target_value, ratio)
        residual = (1.0 - labor_demand_ratio(ratio, value, 1.0)) - target_value
    elif target_name == "displacement" and args.solve == "exposure":
        value = implied_exposure(target_value, ratio, sigma)
        residual = (1.0 - labor_demand_ratio(ratio, sigma, value)) - target_value
    elif target_name == "displacement" and args.solve == "cost_ratio":
        value = implied_cost_ratio(target_value, sigma, exposure)
        residual = (1.0 - labor_demand_ratio(value, sigma, exposure)) - target_value
    elif target_name == "output" and args.solve == "tfp":
        value = solve_tfp_level(target_value, state.capital, state.labor,
                                state.robotics, params.alpha, theta0)
        probe = EconomyState(year=state.year, tfp=value, capital=state.capital,
                             labor=state.labor, robotics=state.robotics,
                             wage=state.wage, robot_cost=state.robot_cost)
        residual = production_output(probe, params.alpha, theta0) - target_value
    else:
        raise _UsageError(
            f"cannot solve {args.solve!r} from target {target_name!r}; supported: "
            "gain->theta, gain->robotics_growth, displacement->sigma, "
            "displacement->exposure, displacement->cost_ratio, output->tfp")

    report = CalibrationReport(target_name=target_name, target_value=target_value,
                               parameter=args.solve, value=value,
                               residual=residual, iterations=iterations)
    print(f"solved {args.solve} = {value:.6g} against {target_name}={target_value:g} "
          f"(scenario {scenario.name})", file=sys.stderr)
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_OK


def _cmd_sensitivity(args) -> int:
    config = load_config(args.config)
    scenario = config.scenario(args.scenario)
    if not 0 <= args.perturb < 100:
        raise _UsageError(f"--perturb must lie in [0, 100), got {args.perturb:g}")
    specs = default_specs(args.perturb / 100.0)
    records = one_at_a_time(scenario, config.params, config.initial_state,
                            config.baseline, specs, config.sectors)
    header = f"{'parameter':<16} {'metric':<16} {'low':>14} {'base':>14} " \
             f"{'high':>14} {'swing':>14}"
    print(header)
    for record in records:
        line = (f"{record.parameter:<16} {record.metric:<16} "
                f"{record.low_result:>14.6g} {record.baseline_result:>14.6g} "
                f"{record.high_result:>14.6g} {record.swing:>14.6g}")
        if record.error:
            line += f"  [{record.error}]"
        print(line)
    if args.out is not None:
        path = write_sensitivity_csv(records, args.out)
        print(f"wrote {path}", file=sys.stderr)
    return EXIT_OK


def _cmd_validate(args) -> int:
    config = load_config(args.config)
    print(f"config OK: dataset_version {config.dataset_version}, "
          f"{len(config.scenarios)} scenarios, {len(config.sectors)} sectors",
          file=sys.stderr)
    return EXIT_OK


def cli_dispatch(argv: Sequence[str]) -> int:
    """Parse arguments, run the subcommand, map errors to exit codes."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
        return args.func(args)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ModelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
