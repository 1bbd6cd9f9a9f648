import os
import random
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

SEED = int(os.environ.get("HOPF_LPA_SEED", "20240611"))

settings.register_profile(
    "repo",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@pytest.fixture
def rng():
    return random.Random(SEED)


def pytest_collection_modifyitems(config, items):
    # the seed only shuffles test order; algorithms are deterministic
    if "HOPF_LPA_SEED" in os.environ:
        random.Random(SEED).shuffle(items)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
