import sys
from pathlib import Path

import pytest

from lpodlab.parser import parse_program

sys.path.insert(0, str(Path(__file__).parent))

PROGRAMS = Path(__file__).resolve().parent.parent / "demos" / "programs"


def load(name):
    return parse_program((PROGRAMS / name).read_text())


@pytest.fixture
def programs_dir():
    return PROGRAMS


@pytest.fixture
def mercedes():
    return load("mercedes.lpod")


@pytest.fixture
def swapped_pair():
    return load("swapped_a.lpod"), load("swapped_b.lpod")


@pytest.fixture
def triple_pair():
    return load("triple_a.lpod"), load("triple_b.lpod")


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
