import pytest
from hypothesis import strategies as st

from iesat.model import Formula

K1_CLAUSES = [[-1, 2], [2, 3], [-2, -3], [1, -2, 3]]
K2_CLAUSES = K1_CLAUSES + [[1, 2], [-1, -2]]


@pytest.fixture
def k1():
    return Formula.from_lists(3, K1_CLAUSES)


@pytest.fixture
def k2():
    return Formula.from_lists(3, K2_CLAUSES)


@st.composite
def clauses(draw, n, min_size=1, max_size=None):
    variables = draw(st.lists(st.integers(1, n), min_size=min_size, max_size=max_size or n, unique=True))
    signs = draw(st.lists(st.booleans(), min_size=len(variables), max_size=len(variables)))
    return tuple(sorted((v if s else -v for v, s in zip(variables, signs)), key=abs))


@st.composite
def formulas(draw, max_n=8, max_m=10, min_n=1):
    n = draw(st.integers(min_n, max_n))
    if n == 0:
        cs = draw(st.lists(st.just(()), max_size=2))
    else:
        cs = draw(st.lists(clauses(n), max_size=max_m))
    return Formula(n, tuple(cs))


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
