from __future__ import annotations

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_RESULTS: dict[int, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if call.when == "call" or (call.when == "setup" and call.excinfo is not None):
        if call.excinfo is None:
            outcome = "passed"
        elif call.excinfo.errisinstance(__import__("pytest").skip.Exception):
            outcome = "skipped"
        else:
            outcome = "failed"
        _RESULTS.setdefault(mark.args[0], []).append(outcome)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_RESULTS):
        outs = _RESULTS[k]
        status = "FAIL" if "failed" in outs else "PASS"
        extra = f" ({outs.count('skipped')} part(s) skipped)" if "skipped" in outs else ""
        terminalreporter.write_line(f"CRITERION {k}: {status}{extra}")
