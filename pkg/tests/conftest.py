import re

from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    deadline=None,
    derandomize=True,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    nodeid = report.nodeid.replace("\\", "/")
    if report.when == "call" and "test_acceptance.py::" in nodeid:
        _ACCEPTANCE[nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return

    def criterion_index(name: str) -> int:
        m = re.search(r"c(\d+)", name)
        return int(m.group(1)) if m else 0

    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=criterion_index):
        outcome = "PASS" if _ACCEPTANCE[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{name}: {outcome}")
