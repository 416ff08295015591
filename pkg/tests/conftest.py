import pytest

from hilbring import structure_constants


@pytest.fixture
def cold_cache():
    """Run with an empty theta memo and restore it afterwards."""
    saved = structure_constants.cache_items()
    structure_constants.clear_cache()
    yield
    structure_constants.clear_cache()
    structure_constants.seed_cache(saved)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
    if not any(line.startswith("ACCEPTANCE 10") for line in RESULTS) and RESULTS:
        terminalreporter.write_line("ACCEPTANCE 10: SKIP  informational d=11 run skipped")
