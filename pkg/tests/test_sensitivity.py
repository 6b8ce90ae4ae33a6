"""One-at-a-time perturbations, tornado ordering, FD elasticities."""

import math

import pytest
from mpmath import mp

import robolabor.sensitivity as sensitivity_module
from robolabor import (
    DomainError,
    EconomyState,
    ModelParams,
    PerturbationSpec,
    Scenario,
    SimulationMode,
    StaticTheta,
    default_specs,
    elasticity_fd,
    one_at_a_time,
    production_output,
    run_scenario,
)
from robolabor.sensitivity import METRICS, PARAMETERS


def by_parameter(records):
    return {record.parameter: record for record in records}


class TestOneAtATime:
    def test_theta_swing_reference_values(self, cfg, params, state0, baseline):
        records = one_at_a_time(cfg.scenario("baseline"), params, state0,
                                baseline, specs=[PerturbationSpec("theta")])
        (record,) = records
        # 1.05**0.45 - 1 and 1.05**0.55 - 1
        assert record.low_result == pytest.approx(0.022198371150337317, rel=1e-9)
        assert record.high_result == pytest.approx(0.02719788021025307, rel=1e-9)
        mp.dps = 50
        low = float(mp.mpf("1.05") ** mp.mpf(0.45) - 1)
        high = float(mp.mpf("1.05") ** mp.mpf(0.55) - 1)
        assert record.low_result == pytest.approx(low, rel=1e-12)
        assert record.high_result == pytest.approx(high, rel=1e-12)
        assert record.swing == record.high_result - record.low_result

    def test_zero_perturbation_zero_swings(self, cfg, params, state0, baseline):
        records = one_at_a_time(cfg.scenario("baseline"), params, state0,
                                baseline, specs=default_specs(0.0))
        assert len(records) == len(PARAMETERS)
        for record in records:
            assert record.swing == 0.0
            assert record.low_result == record.baseline_result
            assert record.pct_deviation_low == 0.0
            assert record.pct_deviation_high == 0.0
            assert record.error is None

    def test_baseline_runs_exactly_once(self, cfg, params, state0, baseline,
                                        monkeypatch):
        calls = []
        inner = run_scenario

        def counting(*args, **kwargs):
            calls.append(args[0].name)
            return inner(*args, **kwargs)

        monkeypatch.setattr(sensitivity_module, "run_scenario", counting)
        records = one_at_a_time(cfg.scenario("baseline"), params, state0,
                                baseline)
        assert len(calls) == 1 + 2 * len(PARAMETERS)
        base_results = {record.baseline_result for record in records
                        if record.metric == "displacement"}
        assert len(base_results) == 1

    def test_tornado_ordering(self, cfg, params, state0, baseline):
        records = one_at_a_time(cfg.scenario("baseline"), params, state0,
                                baseline)
        failed = [math.isnan(record.swing) for record in records]
        # failures, if any, are all at the tail
        assert failed == sorted(failed)
        magnitudes = [abs(record.swing) for record in records
                      if not math.isnan(record.swing)]
        assert magnitudes == sorted(magnitudes, reverse=True)

    def test_domain_breach_is_recorded_not_raised(self, state0, baseline):
        # alpha*1.1 + theta = 0.506 + 0.5 breaches the unit elasticity budget
        params = ModelParams(alpha=0.46, theta=StaticTheta(0.5), sigma=0.65)
        scenario = Scenario(name="edge", mode=SimulationMode.COMPARATIVE_STATIC,
                            horizon=(2030, 2030), robotics_growth=0.05,
                            cost_ratio_path=1.05)
        (record,) = one_at_a_time(
            scenario, params, state0, baseline,
            specs=[PerturbationSpec("alpha", metric="terminal_output")])
        assert record.error is not None
        assert "high perturbation invalid" in record.error
        assert math.isnan(record.high_result)
        assert math.isnan(record.swing)
        assert not math.isnan(record.low_result)

    def test_failed_records_sort_last(self, state0, baseline):
        # alpha*1.1 and theta*1.1 breach the elasticity budget, and full
        # exposure cannot scale above 1; the three failures sort by name
        params = ModelParams(alpha=0.46, theta=StaticTheta(0.5), sigma=0.65)
        scenario = Scenario(name="edge", mode=SimulationMode.COMPARATIVE_STATIC,
                            horizon=(2030, 2030), robotics_growth=0.05,
                            cost_ratio_path=1.05)
        records = one_at_a_time(scenario, params, state0, baseline)
        assert [r.parameter for r in records[-3:]] == \
            ["alpha", "exposure_share", "theta"]
        assert all(record.error is not None for record in records[-3:])
        assert all(record.error is None for record in records[:-3])

    def test_full_exposure_high_side_breach(self, cfg, params, state0, baseline):
        # low_adoption runs at full exposure; scaling it to 1.1 is invalid
        records = one_at_a_time(
            cfg.scenario("low_adoption"), params, state0, baseline,
            specs=[PerturbationSpec("exposure_share", metric="displacement")])
        (record,) = records
        assert record.error is not None and "high" in record.error
        assert record.high_value == pytest.approx(1.1, rel=1e-12)
        assert record.low_result == pytest.approx(0.9 * 0.019, rel=1e-6)

    def test_cost_ratio_perturbs_the_deviation_from_one(self, cfg, params,
                                                        state0, baseline):
        records = one_at_a_time(cfg.scenario("baseline"), params, state0,
                                baseline, specs=[PerturbationSpec("cost_ratio",
                                                 metric="displacement")])
        (record,) = records
        assert record.baseline_value == 1.05
        assert record.low_value == pytest.approx(1.045, rel=1e-12)
        assert record.high_value == pytest.approx(1.055, rel=1e-12)
        assert record.low_result < record.baseline_result < record.high_result

    def test_sign_consistency(self, cfg, params, state0, baseline):
        records = by_parameter(one_at_a_time(cfg.scenario("baseline"), params,
                                             state0, baseline))
        # more elastic output, cheaper robots, higher substitutability:
        # each pushes its own metric up
        for name in ("theta", "cost_ratio", "sigma", "exposure_share"):
            record = records[name]
            assert record.high_result > record.low_result, name

    def test_tfp_boost_inert_when_spillover_disabled(self, cfg, params, state0,
                                                     baseline):
        records = by_parameter(one_at_a_time(cfg.scenario("baseline"), params,
                                             state0, baseline))
        assert records["tfp_boost"].swing == 0.0

    def test_tfp_boost_active_in_spillover_scenario(self, cfg, params, state0,
                                                    baseline):
        records = by_parameter(one_at_a_time(
            cfg.scenario("productivity_spillover"), params, state0, baseline))
        assert records["tfp_boost"].swing > 0.0

    def test_sector_argument_is_optional(self, cfg, params, state0, baseline,
                                         sectors):
        with_sectors = one_at_a_time(cfg.scenario("baseline"), params, state0,
                                     baseline, sectors=sectors,
                                     specs=[PerturbationSpec("theta")])
        without = one_at_a_time(cfg.scenario("baseline"), params, state0,
                                baseline, specs=[PerturbationSpec("theta")])
        assert with_sectors[0].swing == without[0].swing


class TestSpecs:
    def test_default_specs_cover_all_parameters(self):
        specs = default_specs()
        assert tuple(spec.parameter for spec in specs) == PARAMETERS
        assert all(spec.perturbation == 0.10 for spec in specs)
        assert {spec.metric for spec in specs} <= set(METRICS)

    def test_metric_routing(self):
        specs = {spec.parameter: spec.metric for spec in default_specs()}
        assert specs["alpha"] == "terminal_output"
        assert specs["theta"] == "output_gain"
        assert specs["sigma"] == "displacement"
        assert specs["cost_ratio"] == "displacement"

    @pytest.mark.parametrize("kwargs", [
        {"parameter": "beta"}, {"parameter": "theta", "perturbation": 1.0},
        {"parameter": "theta", "perturbation": -0.1},
        {"parameter": "theta", "metric": "gdp"},
    ])
    def test_spec_validation(self, kwargs):
        with pytest.raises(DomainError):
            PerturbationSpec(**kwargs)


class TestElasticityFd:
    def test_power_law_recovered_exactly(self):
        assert elasticity_fd(lambda p: 3.0 * p ** 2.7, 5.0) == \
            pytest.approx(2.7, rel=1e-12)

    def test_constant_metric(self):
        assert elasticity_fd(lambda p: 42.0, 5.0) == 0.0

    def test_step_size_does_not_matter_for_power_laws(self):
        wide = elasticity_fd(lambda p: p ** -1.3, 2.0, step=0.5)
        narrow = elasticity_fd(lambda p: p ** -1.3, 2.0, step=0.01)
        assert wide == pytest.approx(narrow, rel=1e-9)

    def test_recovers_robotics_elasticity_of_output(self, state0):
        def metric(robotics):
            state = EconomyState(year=state0.year, tfp=state0.tfp,
                                 capital=state0.capital, labor=state0.labor,
                                 robotics=robotics, wage=state0.wage,
                                 robot_cost=state0.robot_cost)
            return production_output(state, 0.35, 0.5)

        assert elasticity_fd(metric, 1.0) == pytest.approx(0.5, rel=1e-9)

    @pytest.mark.parametrize("value,step", [(0.0, 0.1), (-1.0, 0.1),
                                            (1.0, 0.0), (1.0, 1.0)])
    def test_validation(self, value, step):
        with pytest.raises(DomainError):
            elasticity_fd(lambda p: p, value, step=step)

    def test_negative_metric_rejected(self):
        with pytest.raises(DomainError):
            elasticity_fd(lambda p: p - 10.0, 1.0)
