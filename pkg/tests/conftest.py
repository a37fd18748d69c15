# Collects one line per acceptance criterion and prints them at the end of the run.

import re

ACCEPTANCE: dict[str, str] = {}


def _order(label):
    m = re.match(r"(\d+)(.*)", label)
    return int(m.group(1)), m.group(2)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE, key=_order):
        terminalreporter.write_line(ACCEPTANCE[k])
