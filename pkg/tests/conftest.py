import random

import pytest

from hotspots.generate import WalkParams, generate
from hotspots.trajectory import Trajectory

# lines appended by test_acceptance, printed after the run
ACCEPTANCE_LINES: list[str] = []

T4_ROWS = [(0.0, 0.0, 0.0), (1.0, 1.0, 0.0), (2.0, 3.0, 0.0), (3.0, 3.0, 2.0)]


@pytest.fixture
def t4():
    return Trajectory.from_vertices(T4_ROWS)


def random_case(seed: int, n_max: int = 200):
    """A seeded (trajectory, side) pair covering tight and loose squares."""
    rng = random.Random(seed)
    n = rng.randint(2, n_max)
    params = WalkParams(
        extent=rng.choice([3.0, 10.0, 50.0]),
        step=rng.choice([0.2, 1.0, 3.0]),
        dwell_fraction=rng.choice([0.0, 0.2, 0.5, 0.9]),
        dwell_steps=rng.choice([3.0, 10.0]),
    )
    T = generate(n, seed, params)
    side = rng.choice([0.3, 1.0, 2.0, 5.0, 20.0])
    return T, side


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
