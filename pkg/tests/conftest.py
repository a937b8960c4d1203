import os

from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


# ---- acceptance summary: one line per criterion ----

_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            _CRITERIA.setdefault(number, {"title": title, "outcomes": []})


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for number, info in _CRITERIA.items():
        if f"criterion_{number:02d}" in report.nodeid:
            info["outcomes"].append((report.nodeid.split("::")[-1], report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        info = _CRITERIA[number]
        outcomes = info["outcomes"]
        if not outcomes:
            status = "NOT RUN"
        else:
            status = "PASS" if all(ok for _, ok in outcomes) else "FAIL"
        line = f"criterion {number:2d}: {status:7s} {info['title']}"
        failed = [name for name, ok in outcomes if not ok]
        if failed:
            line += f"  [failed: {', '.join(failed)}]"
        terminalreporter.write_line(line)
