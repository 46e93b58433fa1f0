import pytest

from homlie import corpus

_criteria = []


@pytest.fixture(scope="session")
def algebras():
    return corpus.corpus()


@pytest.fixture(params=corpus.NAMES)
def named_algebra(request):
    return request.param, corpus.load(request.param)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and rep.when == "call":
        number, title = marker.args
        _criteria.append((number, title, rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    # a criterion passes only if every test carrying its marker passed
    summary = {}
    for number, title, outcome in _criteria:
        ok = summary.get(number, (title, True))[1]
        summary[number] = (title, ok and outcome == "passed")
    terminalreporter.section("acceptance criteria")
    for number in sorted(summary):
        title, ok = summary[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}")
