import pytest

from ordroot.oracle import primes_below, trial_factorize
from ordroot.order import GroupSpec


def spec_for(p):
    return GroupSpec(p, trial_factorize(p - 1))


@pytest.fixture(scope="session")
def small_specs():
    """GroupSpecs for every odd prime below 2000."""
    return [spec_for(p) for p in primes_below(2000) if p > 2]


_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    n, title = marker.args
    ok = call.excinfo is None and _CRITERIA.get(n, (title, True))[1]
    _CRITERIA[n] = (title, ok)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, ok = _CRITERIA[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {n}. {title}")
