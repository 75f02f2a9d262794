import re
from collections import OrderedDict

_ACCEPTANCE = OrderedDict()
_PATTERN = re.compile(r"test_acceptance\.py::test_criterion_(\d+)([a-z]?)_(\w+)")


def pytest_runtest_logreport(report):
    m = _PATTERN.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        crit = int(m.group(1))
        _ACCEPTANCE.setdefault(crit, []).append((f"{crit}{m.group(2)} {m.group(3)}", report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_ACCEPTANCE):
        parts = _ACCEPTANCE[crit]
        ok = all(p for _, p in parts)
        failing = list(dict.fromkeys(name for name, p in parts if not p))
        names = ", ".join(dict.fromkeys(name for name, _ in parts))
        line = f"criterion {crit}: {'PASS' if ok else 'FAIL'}  ({names})"
        if failing:
            line += f"  failing: {', '.join(failing)}"
        terminalreporter.write_line(line)
