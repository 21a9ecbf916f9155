import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from casimir_plates.matsubara import NumericsConfig, system_for_scenario
from casimir_plates.realfreq import force_evanescent

STANDARD_GRID_UM = (0.5, 1.0, 2.0, 4.0, 6.0)


@pytest.fixture(scope="session")
def cfg():
    return NumericsConfig()


@pytest.fixture(scope="session")
def fast_cfg():
    # loose enough to keep unit tests quick, tight enough for 1e-6 checks
    return NumericsConfig(rel_tol=1e-7, matsubara_tail_tol=1e-8)


@pytest.fixture(scope="session")
def au_ni_1um():
    return system_for_scenario("au-ni", 1e-6, 300.0)


@pytest.fixture(scope="session")
def ni_ni_1um():
    return system_for_scenario("ni-ni", 1e-6, 300.0)


@pytest.fixture(scope="session")
def au_au_1um():
    return system_for_scenario("au-au", 1e-6, 300.0)


_EVAN_CACHE = {}


@pytest.fixture(scope="session")
def evan():
    """Memoized force_evanescent: the acceptance criteria reuse many values."""

    def compute(pol, scenario, a_um, model, mu_static=None, cfg=None, **kw):
        cfg = cfg or NumericsConfig()
        key = (pol, scenario, a_um, model, mu_static, cfg.rel_tol,
               cfg.t_min_cutoff, tuple(sorted(kw.items())))
        if key not in _EVAN_CACHE:
            sys_ = system_for_scenario(scenario, a_um * 1e-6, 300.0)
            if mu_static is not None:
                sys_ = sys_.with_mu_static(mu_static)
            _EVAN_CACHE[key] = force_evanescent(pol, sys_, model, cfg, **kw)
        return _EVAN_CACHE[key]

    return compute
