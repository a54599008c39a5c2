import pytest

# criterion number -> (ok, detail); filled by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture
def record_criterion():
    def record(num, ok, detail):
        ACCEPTANCE[num] = (ok, detail)
        print(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
    return record
