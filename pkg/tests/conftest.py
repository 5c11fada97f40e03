import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from packpaint.graph import from_edge_list

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, max_n=9, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, chosen)


@pytest.fixture
def rng(request):
    """Seeded RNG; the seed is printed so failures can be replayed."""
    seed = getattr(request, "param", 20261014)
    print(f"seed={seed}")
    return random.Random(seed)


CRITERIA_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA_LINES:
            terminalreporter.write_line(line)
