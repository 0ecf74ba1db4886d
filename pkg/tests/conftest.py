import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

SLOW = os.environ.get("GERMCODIM_SLOW", "") not in ("", "0")


def pytest_collection_modifyitems(config, items):
    if SLOW:
        return
    skip = pytest.mark.skip(reason="slow tier; set GERMCODIM_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session", autouse=True)
def _compiled_kernels():
    # first kernel use triggers numba compilation; keep it out of timed criteria
    from germcodim import MapGerm, ae_codim, ramification

    g = MapGerm.from_strings(["x", "y"], ["X", "Y", "Z"], (1, 1), (1, 2, 3),
                             ["x", "y^2", "y^3+x^2*y"])
    ramification(g)
    ae_codim(g)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
    if not SLOW:
        terminalreporter.write_line(
            "[NOT RUN] criteria 8-10: slow tier, enable with GERMCODIM_SLOW=1"
        )
