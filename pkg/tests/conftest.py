from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

# JIT warmup can stall a first example; wall-clock deadlines are meaningless here
settings.register_profile(
    "complat", deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("complat")

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES
