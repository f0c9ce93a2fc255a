import pytest

from concentration2.oracle import all_semigroups_by_genus


@pytest.fixture(scope="session")
def universe():
    """All numerical semigroups of genus <= 16 (11770 of them)."""
    return all_semigroups_by_genus(16)


def pytest_terminal_summary(terminalreporter, config):
    from test_acceptance import acceptance_key

    lines = config.stash.get(acceptance_key, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
