import pytest

ACCEPTANCE_RESULTS: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; it passes only if the test body finishes."""
    holder = {}

    def record(number: int, title: str) -> None:
        holder["key"] = (number, title)
        ACCEPTANCE_RESULTS[number] = (title, False)

    yield record
    if "key" in holder:
        number, title = holder["key"]
        rep = getattr(request.node, "rep_call", None)
        ACCEPTANCE_RESULTS[number] = (title, bool(rep and rep.passed))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, ok = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}")
