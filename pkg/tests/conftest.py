import random
from fractions import Fraction

from hypothesis import strategies as st

from assocpoly.associahedron import random_k_point
from assocpoly.multiplihedron import HALF, random_j_point

# criterion lines collected by test_acceptance and echoed in the summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


seeds = st.integers(min_value=0, max_value=2**32)


def k_points(n_min: int = 1, n_max: int = 6):
    return st.tuples(st.integers(n_min, n_max), seeds).map(lambda p: random_k_point(p[0], random.Random(p[1]), 6))


def k_point_of(n: int):
    return seeds.map(lambda s: random_k_point(n, random.Random(s), 6))


def j_points(n_min: int = 1, n_max: int = 6, a=HALF):
    return st.tuples(st.integers(n_min, n_max), seeds).map(lambda p: random_j_point(p[0], random.Random(p[1]), a, 6))


def j_point_of(n: int, a=HALF):
    return seeds.map(lambda s: random_j_point(n, random.Random(s), a, 6))


rationals = st.fractions(min_value=0, max_value=4, max_denominator=12)
unit_interval = st.fractions(min_value=0, max_value=1, max_denominator=12)


def nonneg_vectors(n_min: int = 1, n_max: int = 8):
    return st.lists(rationals, min_size=n_min, max_size=n_max).map(tuple)


def F(*xs):
    return tuple(Fraction(x) for x in xs)
