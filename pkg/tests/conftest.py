import pytest

# (number, title, passed) rows filled in by tests/test_acceptance.py
ACCEPTANCE = []


@pytest.fixture
def acceptance():
    """Record an acceptance verdict and assert it."""
    def _record(num, title, passed):
        ACCEPTANCE.append((num, title, bool(passed)))
        assert passed, f"acceptance criterion {num}: {title}"
    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for num, title, passed in sorted(ACCEPTANCE):
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"  {num:2d}. [{verdict}] {title}")
    good = sum(1 for _, _, p in ACCEPTANCE if p)
    terminalreporter.write_line(f"  {good}/{len(ACCEPTANCE)} criteria pass")
