import pytest

from approxring import load_fixture


@pytest.fixture(scope="session")
def image16():
    return load_fixture("builtin:image16")


@pytest.fixture(scope="session")
def f2():
    return load_fixture("builtin:f2")


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS, key=lambda l: l.split("criterion ")[1]):
            terminalreporter.write_line(line)
