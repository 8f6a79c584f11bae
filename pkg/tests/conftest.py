import numpy as np
import pytest

from surftrace import scenarios


@pytest.fixture(scope="session")
def scenario_results():
    """Run each scenario at most once per test session."""
    cache = {}

    def get(sid: str):
        if sid not in cache:
            cache[sid] = scenarios.run_scenario(sid)
        return cache[sid]

    return get


@pytest.fixture(scope="session")
def corpus():
    return scenarios.corpus()


@pytest.fixture(scope="session")
def fixture_reports():
    return scenarios.fixture_reports()


def interior_grid(surface, nt=10, nz=10, inset=0.1):
    dom = surface.domain.inset(inset)
    ts = np.linspace(dom.t_min, dom.t_max, nt)
    zs = np.linspace(dom.z_min, dom.z_max, nz)
    return [(float(t), float(z)) for t in ts for z in zs]
