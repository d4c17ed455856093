"""Shared fixtures around the [14, 8] reference code.

Its generator 1 + x^3 + x^4 + x^5 + x^6 (hex 79) is small enough to check
every intermediate object by hand, so most golden values in the suite
come from it.
"""

import pytest

from burstcodes import Gf2Poly, build_generator, parity_check, systematize

REF_BITS = 121
REF_N = 14
REF_K = 8

# column j of the parity-check matrix read as a number, MSB = first row
REF_COLUMNS = [52, 26, 13, 33, 55, 60, 30, 15, 32, 16, 8, 4, 2, 1]


def make_parity_check(bits, n, k):
    return parity_check(systematize(build_generator(Gf2Poly(bits), n, k)))


@pytest.fixture
def ref_poly():
    return Gf2Poly(REF_BITS)


@pytest.fixture
def ref_H():
    return make_parity_check(REF_BITS, REF_N, REF_K)
