import sys

import pytest

from apcubes.resolver import KNOWN_SOLUTIONS, verify_solution


@pytest.fixture(scope="session")
def theorem_records():
    return [verify_solution(*t) for t in KNOWN_SOLUTIONS]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        name, ok, detail = results[n]
        terminalreporter.write_line(f"criterion {n} [{'PASS' if ok else 'FAIL'}] {name}")
