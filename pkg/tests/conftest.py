"""Shared fixtures: small reference objects with hand-checked properties."""

import pytest

from bitrades import TauTriple, TradePair, enumerate_all, triple_from_code

# the four-point class: three pairings of {0,1,2,3}
INTERCALATE_CYCLES = (
    [(0, 1), (2, 3)],
    [(0, 2), (1, 3)],
    [(0, 3), (1, 2)],
)

# its canonical code, checked by hand: six cycles of two points each,
# labels start at 1, every cycle closed by -1
INTERCALATE_CODE = (1, 2, -1, 1, 3, -1, 1, 4, -1,
                    2, 4, -1, 2, 3, -1, 3, 4, -1)

# 2x2 swap written as two partial tables (row, column, symbol)
SWAP_A = [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]
SWAP_B = [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]

# a 4x5 pair of partial tables with twelve entries, genus 0
DOZEN_A = [(0, 0, 0), (0, 2, 2), (0, 4, 4), (1, 3, 4), (1, 4, 2), (2, 0, 1),
           (2, 1, 3), (2, 2, 0), (2, 3, 2), (3, 0, 4), (3, 1, 1), (3, 3, 3)]
DOZEN_B = [(0, 0, 4), (0, 2, 0), (0, 4, 2), (1, 3, 2), (1, 4, 4), (2, 0, 0),
           (2, 1, 1), (2, 2, 2), (2, 3, 3), (3, 0, 1), (3, 1, 3), (3, 3, 4)]

# the cycles DOZEN converts to, under entry-order point numbering
DOZEN_CYCLES = (
    [(0, 1, 2), (3, 4), (5, 6, 8, 7), (9, 11, 10)],
    [(0, 9, 5), (1, 7), (2, 4), (3, 8, 11), (6, 10)],
    [(0, 7), (1, 8, 4), (2, 3, 9), (5, 10), (6, 11)],
)

# six-point triple with two three-cycles in the first direction
BICYCLIC6_CYCLES = (
    [(0, 1, 2), (3, 5, 4)],
    [(0, 3), (1, 4), (2, 5)],
    [(0, 4), (1, 5), (2, 3)],
)

# known class counts by size, kept as a frozen fixture
CENSUS = {4: 1, 5: 0, 6: 3, 7: 1, 8: 6, 9: 9, 10: 30, 11: 51, 12: 198,
          13: 470, 14: 1623, 15: 4830, 16: 16070, 17: 51948, 18: 175047,
          19: 588120, 20: 2015226}


@pytest.fixture
def intercalate():
    return TauTriple.from_cycles(4, *INTERCALATE_CYCLES)


@pytest.fixture
def dozen_pair():
    return TradePair(DOZEN_A, DOZEN_B)


@pytest.fixture
def bicyclic6():
    return TauTriple.from_cycles(6, *BICYCLIC6_CYCLES)


_CLASS_CACHE = {}


def classes_upto(max_size):
    """One decoded representative per class of size <= max_size."""
    if max_size not in _CLASS_CACHE:
        census = enumerate_all(max_size, emit="forms")
        _CLASS_CACHE[max_size] = {
            s: [triple_from_code(c) for c in codes]
            for s, codes in census.codes.items()
        }
    return _CLASS_CACHE[max_size]
