import time

import pytest

_ACCEPTANCE: list = []


class Criterion:
    """Times one acceptance criterion and records a PASS/FAIL line."""

    def __init__(self, number: int, title: str, limit: float):
        self.number, self.title, self.limit = number, title, limit
        self.failures: list = []
        self.start = time.perf_counter()

    def check(self, ok: bool, what: str) -> bool:
        if not ok:
            self.failures.append(what)
        return ok

    def finish(self) -> None:
        elapsed = time.perf_counter() - self.start
        if elapsed > self.limit:
            self.failures.append(f"took {elapsed:.2f}s, limit {self.limit:g}s")
        status = "FAIL" if self.failures else "PASS"
        line = f"{status} criterion {self.number:>2} {self.title} ({elapsed:.2f}s / {self.limit:g}s)"
        if self.failures:
            shown = "; ".join(self.failures[:3])
            more = len(self.failures) - 3
            line += f": {shown}" + (f" (+{more} more)" if more > 0 else "")
        _ACCEPTANCE.append((self.number, line))
        print(line)
        if self.failures:
            pytest.fail(line, pytrace=False)


@pytest.fixture
def criterion():
    started = []

    def make(number: int, title: str, limit: float) -> Criterion:
        c = Criterion(number, title, limit)
        started.append(c)
        return c

    return make


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_ACCEPTANCE):
        terminalreporter.write_line(line)
