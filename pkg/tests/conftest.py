import re

_NAMES = {
    "test_note_linear_growth": "linear-growth note",
}
_results = {}


def _label(name):
    m = re.match(r"test_criterion_(\d+)_", name)
    return f"criterion {m.group(1)}" if m else _NAMES.get(name)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    label = _label(report.nodeid.rsplit("::", 1)[-1])
    if label is None:
        return
    if report.when == "call" or report.failed:
        if report.passed:
            _results.setdefault(label, "PASS")
        else:
            _results[label] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    key = lambda k: (not k.startswith("criterion"), int(k.split()[1]) if k.startswith("criterion") else 0)
    for label in sorted(_results, key=key):
        terminalreporter.write_line(f"{label}: {_results[label]}")
