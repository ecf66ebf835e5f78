import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_acceptance: dict[str, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: acceptance criterion")


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_ac" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.failed:
        if report.failed or name not in _acceptance:
            _acceptance[name] = "FAIL" if report.failed else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        terminalreporter.write_line(f"{_acceptance[name]}  {name}")
