import pytest

_ACCEPTANCE: list[str] = []


@pytest.fixture
def criterion(request):
    """Yield a callable ``check(label, ok, detail="")``; records a PASS/FAIL line then asserts."""
    def check(label, ok, detail=""):
        _ACCEPTANCE.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  [{detail}]" if detail else ""))
        assert ok, f"{label} {detail}"
    return check


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
