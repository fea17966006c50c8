import pytest

ACCEPTANCE = {}


@pytest.fixture
def record():
    """Store a one-line verdict for an acceptance criterion."""
    def _record(number, ok, detail):
        ACCEPTANCE[number] = (ok, detail)
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
