import pytest

# criterion id -> (passed, description, note)
ACCEPTANCE: dict = {}


@pytest.fixture
def record():
    def _record(criterion: str, passed: bool, description: str, note: str = "") -> bool:
        ACCEPTANCE[criterion] = (passed, description, note)
        return passed

    return _record


def _order(key: str):
    head, _, tail = key.partition("-")
    return (int(head), tail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=_order):
        passed, description, note = ACCEPTANCE[key]
        line = f"criterion {key}: {'PASS' if passed else 'FAIL'} {description}"
        if note:
            line += f" [{note}]"
        terminalreporter.write_line(line)
