import pytest

_results = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    label = marker.args[0]
    passed = call.excinfo is None
    _results[label] = _results.get(label, True) and passed


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_results, key=lambda s: int(s.split()[0][2:])):
        terminalreporter.write_line(f"{'PASS' if _results[label] else 'FAIL'}  {label}")
