import pytest
from hypothesis import settings

# exact orbits have data-dependent cost; wall-clock deadlines only add flakiness
settings.register_profile("default", deadline=None)
settings.load_profile("default")


# -- acceptance summary: one line per criterion --

_results = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    key = marker.args[0]
    failed = rep.failed or (rep.when == "call" and rep.skipped)
    prev = _results.get(key, (True, item.function.__doc__ or ""))
    _results[key] = (prev[0] and not failed, prev[1])


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_results):
        ok, doc = _results[key]
        title = doc.strip().splitlines()[0] if doc.strip() else ""
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {title}")
