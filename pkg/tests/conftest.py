import pytest
from hypothesis import HealthCheck, settings, strategies as st

from semiring_lab.enumerator import enumerate_upto
from semiring_lab.kernel import all_fixtures

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SMALL = enumerate_upto(3) + all_fixtures()
MEDIUM = enumerate_upto(4) + all_fixtures()


def semirings(pool=MEDIUM):
    return st.sampled_from(pool)


def ideals_of(S):
    from semiring_lab.ideals import enumerate_ideals

    return st.sampled_from(enumerate_ideals(S))


@pytest.fixture(scope="session")
def small_corpus():
    return SMALL


@pytest.fixture(scope="session")
def medium_corpus():
    return MEDIUM


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
