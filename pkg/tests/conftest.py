from fractions import Fraction

import pytest

from arglab import build_graph, parse_theory

# Five arguments: two facts b1, b2, an argument for -b on top of them, an
# argument for c guarded by naf on -b, and a fact argument for -c.
RUNNING_EXAMPLE = """\
rb1 : => b1.
rb2 : => b2.
rb  : b1, b2 => -b.
rc  : ~-b => c.
rd  : => -c.
p(rb1) = 1/2.
p(rb2) = 1/5.
"""

# Four rules, no conflicts; generates the chain of arguments
# A = r1(), B = r2(), AB = r3(r1()), BC = r4(r2()), ABC = r4(r3(r1())).
CHAIN = """\
r1 : => a.
r2 : => b.
r3 : a => b.
r4 : b => c.
"""

# Two facts with complementary conclusions, attacking each other.
MUTUAL = """\
rb : => b.
rc : => -b.
"""

A_B1 = "rb1()"
A_B2 = "rb2()"
A_B = "rb(rb1(),rb2())"
A_C = "rc()"
A_D = "rd()"

C_A = "r1()"
C_B = "r2()"
C_AB = "r3(r1())"
C_BC = "r4(r2())"
C_ABC = "r4(r3(r1()))"


def frac(text):
    return Fraction(text)


@pytest.fixture
def running_theory():
    return parse_theory(RUNNING_EXAMPLE)


@pytest.fixture
def running_graph(running_theory):
    return build_graph(running_theory)


@pytest.fixture
def chain_theory():
    return parse_theory(CHAIN)


@pytest.fixture
def chain_graph(chain_theory):
    return build_graph(chain_theory)


@pytest.fixture
def mutual_theory():
    return parse_theory(MUTUAL)


@pytest.fixture
def mutual_graph(mutual_theory):
    return build_graph(mutual_theory)
