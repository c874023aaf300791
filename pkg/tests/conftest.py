import pytest

from tricon.graph import Graph


def _lettered(names, pairs):
    index = {ch: k for k, ch in enumerate(names)}
    return Graph.from_edges(len(names), [(index[p[0]], index[p[1]]) for p in pairs.split()])


# two-step examples in cell (-2, 2) and their parents, vertices lettered a..g
H1_EDGES = "ab ac ad be ec bd cd ed"
G1_EDGES = "af bf df ac ad be ec bd cd ed"
H2_EDGES = "ab ac af bc bg ce fe ge fg"
G2_EDGES = H2_EDGES + " ag"


@pytest.fixture
def step_h1():
    return _lettered("abcde", H1_EDGES)


@pytest.fixture
def step_g1():
    return _lettered("abcdef", G1_EDGES)


@pytest.fixture
def step_h2():
    return _lettered("abcefg", H2_EDGES)


@pytest.fixture
def step_g2():
    return _lettered("abcefg", G2_EDGES)


# criterion number -> title, passed count, failed test ids
_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (report.when != "call" and not report.failed):
        return
    number, title = mark.args
    entry = _criteria.setdefault(number, {"title": title, "passed": 0, "failed": []})
    if report.failed:
        entry["failed"].append(item.name)
    elif report.when == "call":
        entry["passed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        verdict = "FAIL" if entry["failed"] else "PASS"
        line = f"criterion {number:>2} {verdict}: {entry['title']}"
        if entry["failed"]:
            line += f" (failing: {', '.join(entry['failed'])})"
        terminalreporter.write_line(line)
