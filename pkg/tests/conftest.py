import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "nilred", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("nilred")


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="also run the best-effort n = 4 reducedness cases")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="best-effort case; pass --runslow to run it")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


# --- acceptance summary: one line per criterion ------------------------------------------

def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test belongs to")
    config._criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (report.when != "call" and not (report.when == "setup" and report.outcome != "passed")):
        return
    number, title = mark.args
    entry = item.config._criteria.setdefault(number, {"title": title, "cases": [], "seconds": 0.0})
    entry["cases"].append((item.name, report.outcome))
    entry["seconds"] += report.duration


def pytest_terminal_summary(terminalreporter, config):
    criteria = getattr(config, "_criteria", {})
    if not criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(criteria):
        entry = criteria[number]
        outcomes = [o for _, o in entry["cases"]]
        ran = [o for o in outcomes if o != "skipped"]
        failed = [name for name, o in entry["cases"] if o == "failed"]
        status = "FAIL" if failed or not ran else "PASS"
        skipped = len(outcomes) - len(ran)
        extra = f", {skipped} opt-in case(s) skipped" if skipped else ""
        line = (f"criterion {number} [{entry['title']}]: {status} "
                f"({len(ran) - len(failed)}/{len(ran)} cases{extra}, {entry['seconds']:.1f} s)")
        if failed:
            line += " failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
