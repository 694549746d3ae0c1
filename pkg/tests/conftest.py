import pytest
from hypothesis import strategies as st

from taunak.serial import SpecError, parse_signed, validate_spec

A2 = validate_spec(2, [2, 1])
A3 = validate_spec(3, [3, 2, 1])
C3 = validate_spec(3, [2, 2, 2])
D4C = validate_spec(4, [3, 3, 3, 3])

# Small algebras covering linear, cyclic, loop-carrying and non-uniform Kupisch series.
SMALL = [
    validate_spec(1, [1]),
    validate_spec(1, [2]),
    A2,
    validate_spec(2, [2, 2]),
    validate_spec(2, [3, 3]),
    A3,
    C3,
    validate_spec(3, [3, 2, 2]),
    validate_spec(3, [4, 4, 4]),
]
MEDIUM = [D4C, validate_spec(4, [4, 3, 2, 1]), validate_spec(4, [2, 3, 3, 2])]
ALL = SMALL + MEDIUM


def ids(specs):
    return [str(s) for s in specs]


def sig(token: str):
    return parse_signed(token)


@st.composite
def specs(draw, max_n: int = 4, max_len: int = 5):
    """Valid connected Kupisch series."""
    n = draw(st.integers(1, max_n))
    kup = draw(st.lists(st.integers(1, max_len), min_size=n, max_size=n))
    try:
        return validate_spec(n, kup)
    except SpecError:
        from hypothesis import assume
        assume(False)


@pytest.fixture(params=SMALL, ids=ids(SMALL))
def small_spec(request):
    return request.param


# One line per acceptance criterion, filled in by test_acceptance.py and echoed after the run.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
