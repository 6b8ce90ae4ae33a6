import pytest
from hypothesis import HealthCheck, settings

from robolabor import load_config

# property tests must be reproducible run to run
settings.register_profile(
    "deterministic",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow],
)
settings.load_profile("deterministic")


@pytest.fixture(scope="session")
def cfg():
    return load_config("default")


@pytest.fixture(scope="session")
def params(cfg):
    return cfg.params


@pytest.fixture(scope="session")
def state0(cfg):
    return cfg.initial_state


@pytest.fixture(scope="session")
def baseline(cfg):
    return cfg.baseline


@pytest.fixture(scope="session")
def sectors(cfg):
    return cfg.sectors
