import pytest

from futs import fixture_path, load_model

FIXTURES = {
    "c1": "c1.ctmc",
    "l1": "l1.lts",
    "i1": "i1.imc",
    "p1": "p1.pa",
    "m1": "m1.ma",
}

ACCEPTANCE_REPORT = []


@pytest.fixture
def fixture_doc():
    def load(name):
        return load_model(fixture_path(FIXTURES[name]))

    return load


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_REPORT:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_REPORT:
            terminalreporter.write_line(line)
