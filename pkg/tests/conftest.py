import random

import pytest

CRITERIA = {
    1: "trace-form fidelity",
    2: "II_{2,26} realization",
    3: "root counts",
    4: "weight tables",
    5: "c^w / t_d table",
    6: "RST thresholds",
    7: "totative-sum certification",
    8: "catalog verification",
    9: "property suites",
}

_outcomes: dict[int, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    outcome = "passed" if call.excinfo is None else "failed"
    _outcomes.setdefault(marker.args[0], []).append((item.name, outcome))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k, title in CRITERIA.items():
        runs = _outcomes.get(k)
        if not runs:
            tr.write_line(f"criterion {k} NOT RUN  {title}")
            continue
        bad = [name for name, out in runs if out != "passed"]
        status = "PASS" if not bad else "FAIL"
        line = f"criterion {k} {status}  {title} ({len(runs) - len(bad)}/{len(runs)} checks)"
        if bad:
            line += "  failing: " + ", ".join(bad)
        tr.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20240611)
