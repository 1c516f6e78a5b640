import time

import pytest

_TIMINGS = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_TIMINGS] = []


@pytest.fixture
def stopwatch(request):
    """Context manager recording wall-clock time under a label for the summary."""
    records = request.config.stash[_TIMINGS]

    class _Watch:
        def __init__(self, label, budget):
            self.label, self.budget = label, budget

        def __enter__(self):
            self.start = time.perf_counter()
            return self

        def __exit__(self, *exc):
            self.elapsed = time.perf_counter() - self.start
            records.append((self.label, self.elapsed, self.budget))

    return _Watch


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    records = config.stash.get(_TIMINGS, [])
    if not records:
        return
    terminalreporter.section("acceptance timings")
    for label, elapsed, budget in records:
        terminalreporter.write_line(f"{label:<48} {elapsed:7.2f} s  (budget {budget:.0f} s)")
