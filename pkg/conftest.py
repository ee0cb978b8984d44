"""
Shared fixtures: small rings and modules whose lattices and spectra are known by hand.

Element indices of Z_n are the residues; direct sums index mixed-radix (a, b) -> a * |B| + b.
"""

import sys

import pytest

sys.path.insert(0, '.')

from src.algebra.module import build_module, regular_module
from src.algebra.ring import build_ring, upper_triangular_spec, zn_ring

collect_ignore = ["examples"]

Z2Z4_OVER_Z4 = {
    "kind": "direct_sum",
    "ring": {"kind": "Zn", "n": 4},
    "summands": [{"kind": "matrices", "add_cyclic": [2], "matrices": [[[1]]]}, {"kind": "regular"}],
}

Z2_SQUARED = {
    "kind": "direct_sum",
    "ring": {"kind": "Zn", "n": 2},
    "summands": [{"kind": "regular"}, {"kind": "regular"}],
}

@pytest.fixture
def z6():
    return regular_module(zn_ring(6))

@pytest.fixture
def z4():
    return regular_module(zn_ring(4))

@pytest.fixture
def z2xz2():
    return build_module(Z2_SQUARED)

@pytest.fixture
def z2z4_over_z4():
    return build_module(Z2Z4_OVER_Z4)

@pytest.fixture
def ut2():
    return build_ring(upper_triangular_spec(2))
