import pytest

ACCEPTANCE: dict[int, tuple[str, str]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion's outcome for the terminal summary."""
    number, title = request.node.get_closest_marker("criterion").args
    ACCEPTANCE[number] = ("FAIL", title)
    yield
    if not getattr(request.node, "rep_call_failed", True):
        ACCEPTANCE[number] = ("PASS", title)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call_failed = rep.failed


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        status, title = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{status}] {number:>2}. {title}")
