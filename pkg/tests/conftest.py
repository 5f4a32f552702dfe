import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from tepkit.laws import REGISTRY, check_law

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

LAW_TRIALS = 200
LAW_SEED = 0

_criteria: dict[int, dict] = {}


@pytest.fixture(scope="session")
def law_reports():
    """Every registered law at 200 trials, seed 0, run once per session."""
    return {law_id: check_law(law_id, LAW_TRIALS, LAW_SEED) for law_id in REGISTRY}


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            _criteria.setdefault(number, {"title": title, "outcomes": {}})
            _criteria[number]["outcomes"][item.nodeid] = None


def pytest_runtest_logreport(report):
    for entry in _criteria.values():
        if report.nodeid in entry["outcomes"]:
            if report.failed or (report.when == "call" and report.outcome != "passed"):
                entry["outcomes"][report.nodeid] = False
            elif report.when == "call" and entry["outcomes"][report.nodeid] is None:
                entry["outcomes"][report.nodeid] = True


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        values = list(entry["outcomes"].values())
        if any(v is False for v in values):
            status = "FAIL"
        elif values and all(v is True for v in values):
            status = "PASS"
        else:
            status = "NOT RUN"
        terminalreporter.write_line(f"criterion {number}: {status}  {entry['title']}")
