import pytest

_RESULTS = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion, then assert it."""

    def record(cid, ok, detail):
        _RESULTS[cid] = (bool(ok), detail)
        assert ok, f"{cid}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_RESULTS, key=lambda c: (int(c[1:].split("_")[0]), c)):
        ok, detail = _RESULTS[cid]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {cid}: {detail}")
