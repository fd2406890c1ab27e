import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpus import random_instances, random_tally, sweep_tally  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def sweep():
    return sweep_tally(5)


@pytest.fixture(scope="session")
def random_corpus():
    return random_instances()


@pytest.fixture(scope="session")
def random_results(random_corpus):
    return random_tally(random_corpus)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
