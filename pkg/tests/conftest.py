import re

_titles = {}
_outcomes = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = re.match(r"test_ac(\d+)_", item.name)
        if m and item.module.__name__.endswith("test_acceptance"):
            doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
            _titles[item.nodeid] = (int(m.group(1)), doc)


def pytest_runtest_logreport(report):
    if report.nodeid not in _titles:
        return
    if report.when == "call" or report.failed:
        _outcomes[report.nodeid] = _outcomes.get(report.nodeid, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, (num, title) in sorted(_titles.items(), key=lambda kv: kv[1][0]):
        if nodeid in _outcomes:
            verdict = "PASS" if _outcomes[nodeid] else "FAIL"
            terminalreporter.write_line(f"AC{num} {verdict}  {title}")
