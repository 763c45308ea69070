import pytest

from polyring import oracle

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=oracle.available_backends())
def kernel(request):
    """Run a test once per available enumeration backend."""
    prev = oracle.set_backend(request.param)
    yield request.param
    oracle.set_backend(prev)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
