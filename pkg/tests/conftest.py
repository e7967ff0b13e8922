import os

from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

import pytest

# acceptance criterion -> list of (test id, outcome, seconds)
_CRITERIA: dict[int, list[tuple[str, str, float]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): test belongs to acceptance criterion n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        if hasattr(rep, "wasxfail"):
            status = "xfail"
        else:
            status = rep.outcome
        _CRITERIA.setdefault(mark.args[0], []).append((item.name, status, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        rows = _CRITERIA[n]
        bad = [name for name, st, _ in rows if st != "passed"]
        secs = sum(t for _, _, t in rows)
        line = f"criterion {n}: {'FAIL' if bad else 'PASS'}  ({len(rows)} checks, {secs:.1f} s)"
        if bad:
            line += "  not met: " + ", ".join(bad)
        tr.write_line(line)
