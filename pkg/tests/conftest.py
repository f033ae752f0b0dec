from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import strategies as st

from polyaext import MultiPoly


def small_rats():
    return st.builds(Fraction, st.integers(-6, 6), st.integers(1, 5))


@st.composite
def polys(draw, nvars=3, max_degree=4, max_terms=5):
    exps = st.tuples(*[st.integers(0, max_degree) for _ in range(nvars)]).filter(
        lambda e: sum(e) <= max_degree
    )
    terms = draw(st.dictionaries(exps, small_rats(), max_size=max_terms))
    return MultiPoly(nvars, terms)


def orbit_classes(elements, n, m):
    """Independent orbit oracle: canonical representative = lexicographic minimum over the group."""
    reps = {}
    for f in product(range(m), repeat=n):
        rep = min(tuple(f[img[x]] for x in range(n)) for img in elements)
        reps.setdefault(rep, f)
    return reps


def all_images(n):
    return list(permutations(range(n)))


@pytest.fixture
def sym3_images():
    return all_images(3)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
