import pytest

from ctxsim import AttributeSchema, CaseVector

ATTRS = ("north", "central", "communist", "neutral")

COUNTRIES = {
    "Austria": (0, 1, 0, 1),
    "Sweden": (1, 0, 0, 1),
    "Poland": (0, 0, 1, 0),
    "Hungary": (0, 1, 1, 0),
    "Norway": (1, 0, 0, 0),
}


def countries(*names):
    return [CaseVector(n, COUNTRIES[n]) for n in names]


@pytest.fixture
def schema():
    return AttributeSchema(ATTRS)


@pytest.fixture
def context1_cases():
    return countries("Austria", "Sweden", "Poland", "Hungary")


@pytest.fixture
def context2_cases():
    return countries("Austria", "Sweden", "Norway", "Hungary")


_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and (rep.when == "call" or (rep.when == "setup" and rep.failed)):
        _ACCEPTANCE.append((marker.args[0], rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in _ACCEPTANCE:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {label}")
