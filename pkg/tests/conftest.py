import itertools

import pytest
from hypothesis import strategies as st

from qss.enumeration import all_quasigroups, EnumerationConfig, enumerate_latin_squares
from qss.qcore import cyclic_group, from_mul_table, table_from_function

Z2 = cyclic_group(2)
Z2_ODOT = table_from_function(2, lambda x, y: (x + y + 1) % 2)  # x (+) y = x + y + 1
Z3 = cyclic_group(3)
NEG3 = table_from_function(3, lambda x, y: (-x - y) % 3)  # semisymmetric
TRIVIAL = from_mul_table([[0]])
S = (1, 0)  # x -> x + 1 on Z2
ID2 = (0, 1)

CATALOG3 = all_quasigroups(3)
ORDER4 = list(enumerate_latin_squares(EnumerationConfig(4)))


def brute_rdiv(mul, b, a):
    """The x with x*a = b, by search."""
    (x,) = [x for x in range(len(mul)) if mul[x][a] == b]
    return x


def brute_ldiv(mul, a, b):
    (y,) = [y for y in range(len(mul)) if mul[a][y] == b]
    return y


def all_maps(n, m):
    return list(itertools.product(range(m), repeat=n))


@st.composite
def latin_squares(draw, max_order=5):
    n = draw(st.integers(1, max_order))
    rows = draw(st.permutations(range(n)))
    cols = draw(st.permutations(range(n)))
    syms = draw(st.permutations(range(n)))
    return [[syms[(rows[i] + cols[j]) % n] for j in range(n)] for i in range(n)]


@st.composite
def quasigroups(draw, max_order=5):
    if draw(st.booleans()):
        return draw(st.sampled_from(ORDER4))
    return from_mul_table(draw(latin_squares(max_order)))


@pytest.fixture(scope="session")
def catalog3():
    return CATALOG3


@pytest.fixture(scope="session")
def order4():
    return ORDER4
