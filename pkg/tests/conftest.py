import itertools

import numpy as np
import pytest

from qrm.construct import build_generator, parse_matrix, puncture, six04

SEED_41 = """
1111 | 0000
0000 | 1111
0011 | 0101
0101 | 0110
"""

GEN_833 = """
11111111 | 00000000
00001111 | 00000000
00110011 | 00000000
01010101 | 00000000
00000000 | 11111111
00000000 | 00001111
00000000 | 00110011
00000000 | 01010101
00000011 | 00000101
00000101 | 00010001
00010001 | 00000110
"""

STAB_833 = """
11111111 | 00000000
00000000 | 11111111
00001111 | 00110011
00110011 | 01010101
01010101 | 00111100
"""

CAND_16 = """
1111111111111111 | 0000000000000000
0000000011111111 | 0000000000000000
0000111100001111 | 0000000000000000
0011001100110011 | 0000000000000000
0101010101010101 | 0000000000000000
0000000000000000 | 1111111111111111
0000000000000000 | 0000000011111111
0000000000000000 | 0000111100001111
0000000000000000 | 0011001100110011
0000000000000000 | 0101010101010101
0000000000001111 | 0000000000110011
0000000000110011 | 0000000001010101
0000000001010101 | 0000001100000011
0000001100000011 | 0000010100000101
0000010100000101 | 0001000100010001
0001000100010001 | 0000000000111100
"""

# D rows of the [[32,10,6]] stabilizer listing; two RM(1,5) blocks precede them.
# The printed block label G[32,16,8] cannot be right: the stabilizer has 22 rows.
STAB_32_D = """
00000000000000000000000011111111 | 00000000000000000000111100001111
00000000000000000000111100001111 | 00000000000000000011001100110011
00000000000000000011001100110011 | 00000000000000000101010101010101
00000000000000000101010101010101 | 00000000000011110000000000001111
00000000000011110000000000001111 | 00000000001100110000000000110011
00000000001100110000000000110011 | 00000000010101010000000001010101
00000000010101010000000001010101 | 00000011000000110000001100000011
00000011000000110000001100000011 | 00000101000001010000010100000101
00000101000001010000010100000101 | 00010001000100010001000100010001
00010001000100010001000100010001 | 00000000000000000000111111110000
"""

SIX04 = """
001111 | 000000
110011 | 000000
000000 | 001111
000000 | 110011
111111 | 010101
010101 | 100101
"""


def lines(text):
    return [s.strip() for s in text.strip().splitlines()]


def stab_32_listing():
    """Full 22-row [[32,10,6]] stabilizer listing, blocks read as RM(1,5)."""
    from qrm.construct import pair
    from qrm.gf2 import Gf2Matrix
    from qrm.reedmuller import rm_generator

    g = rm_generator(1, 5).generator
    z = Gf2Matrix.zeros(g.n_rows, 32)
    return pair(g, z).vstack(pair(z, g), parse_matrix(STAB_32_D))


def brute_min_or_weight(m):
    """Enumerate every nonzero combination of rows directly with numpy."""
    a = m.to_array().astype(np.int64)
    k, cols = a.shape
    n = cols // 2
    coeffs = np.array(list(itertools.product((0, 1), repeat=k))[1:], dtype=np.int64)
    words = coeffs @ a % 2
    return int(((words[:, :n] | words[:, n:]) != 0).sum(axis=1).min())


@pytest.fixture(scope="session")
def code833():
    return build_generator(3, 1)


@pytest.fixture(scope="session")
def code32():
    return build_generator(5, 2)


@pytest.fixture(scope="session")
def code513():
    return puncture(six04(), 0)


ACCEPTANCE = []


def record(number, passed, detail=""):
    ACCEPTANCE.append((number, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, detail in sorted(ACCEPTANCE, key=lambda x: x[0]):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")
