"""
Rings, modules, the submodule lattice, quotients, colon operations and radicals.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra.groups import AbelianGroup
from src.algebra.ideals import Ideal, colon_ideal, colon_submodule, ideal_product, two_sided_ideals
from src.algebra.lattice import (
    brute_force_submodules,
    enumerate_submodules,
    generated_submodule,
    is_chain,
    submodule,
    submodule_intersect,
    submodule_sum,
    zero_submodule,
)
from src.algebra.module import build_module, regular_module, validate_module
from src.algebra.presentation import quotient_module, submodule_as_module
from src.algebra.radicals import position_predicates, radicals
from src.algebra.ring import build_ring, opposite_ring, zn_ring
from src.utils.config import Config
from src.utils.errors import (
    NoIdentityError,
    NonAssociativeError,
    NotASubmoduleError,
    NotDistributiveError,
    ParseError,
    SizeCapError,
    ValidationError,
    ZeroModuleError,
)

Z2Z4_OVER_Z4 = {
    "kind": "direct_sum",
    "ring": {"kind": "Zn", "n": 4},
    "summands": [{"kind": "matrices", "add_cyclic": [2], "matrices": [[[1]]]}, {"kind": "regular"}],
}


def elements(subs):
    return [s.elements for s in subs]


def additive_order(ring, x):
    total, n = x, 1
    while total != 0:
        total = int(ring.add[total, x])
        n += 1
    return n


# rings

def test_zn_ring():
    ring = build_ring({"kind": "Zn", "n": 6})
    assert ring.order == 6
    assert ring.one == 1
    assert ring.is_commutative()
    assert int(ring.mul[4, 5]) == 2


def test_product_ring_is_cyclic():
    ring = build_ring({"kind": "product", "factors": [{"kind": "Zn", "n": 2}, {"kind": "Zn", "n": 3}]})
    assert ring.order == 6
    assert ring.one == 1 * 3 + 1
    assert additive_order(ring, ring.one) == 6


def test_upper_triangular_ring(ut2):
    assert ut2.order == 8
    assert not ut2.is_commutative()
    assert ut2.add_cyclic == [2, 2, 2]


def test_opposite_ring_transposes(ut2):
    op = opposite_ring(ut2)
    assert np.array_equal(op.mul, ut2.mul.T)
    assert op.one == ut2.one


def test_flipped_z6_table_is_rejected():
    mul = (np.outer(np.arange(6), np.arange(6)) % 6).tolist()
    mul[2][3] = 1
    with pytest.raises((NonAssociativeError, NotDistributiveError)) as excinfo:
        build_ring({"kind": "table", "add_cyclic": [6], "mul": mul, "one": 1})
    assert excinfo.value.pointer == "/mul"
    assert excinfo.value.witness is not None


def test_zero_ring_has_no_identity():
    with pytest.raises(ParseError):
        build_ring({"kind": "Zn", "n": 1})
    mul = [[0, 0], [0, 0]]
    with pytest.raises(NoIdentityError):
        build_ring({"kind": "table", "add_cyclic": [2], "mul": mul})


def test_ring_cap():
    with pytest.raises(SizeCapError):
        build_ring({"kind": "Zn", "n": 65})
    with pytest.raises(SizeCapError):
        build_ring({"kind": "Zn", "n": 10}, Config(ring_cap=8))


def test_malformed_spec_points_at_field():
    with pytest.raises(ParseError) as excinfo:
        build_ring({"kind": "product", "factors": [{"kind": "Zn", "n": 2}, {"kind": "Zn"}]})
    assert excinfo.value.pointer.startswith("/factors/1")


# modules

def test_regular_module(z6):
    assert z6.order == 6
    assert int(z6.act[2, 5]) == 4


def test_matrices_module():
    module = build_module({"ring": {"kind": "Zn", "n": 4}, "add_cyclic": [2, 4],
                           "matrices": [[[1, 0], [0, 1]]]})
    assert module.order == 8
    # 3 * (1, 3) = (1, 1)
    assert int(module.act[3, 1 * 4 + 3]) == 1 * 4 + 1


def test_scalar_module_over_z2(z2xz2):
    assert z2xz2.order == 4
    assert np.array_equal(z2xz2.act[1], np.arange(4))
    assert np.array_equal(z2xz2.act[0], np.zeros(4))


def test_zero_module_rejected():
    with pytest.raises(ZeroModuleError):
        validate_module(zn_ring(2), AbelianGroup([]), np.zeros((2, 1), dtype=np.int64))
    with pytest.raises(ParseError):
        build_module({"ring": {"kind": "Zn", "n": 2}, "kind": "table", "add_cyclic": [1], "act": [[0], [0]]})


def test_non_unital_action_rejected():
    with pytest.raises(ValidationError):
        build_module({"ring": {"kind": "Zn", "n": 2}, "kind": "table", "add_cyclic": [2],
                      "act": [[0, 0], [0, 0]]})


# lattice

def test_z6_submodules(z6):
    assert elements(enumerate_submodules(z6)) == [(0,), (0, 3), (0, 2, 4), (0, 1, 2, 3, 4, 5)]


def test_z4_submodules(z4):
    assert elements(enumerate_submodules(z4)) == [(0,), (0, 2), (0, 1, 2, 3)]
    assert is_chain(z4)


def test_z2_squared_submodules(z2xz2):
    assert len(enumerate_submodules(z2xz2)) == 5
    assert not is_chain(z2xz2)


@pytest.mark.parametrize("fixture", ["z6", "z4", "z2xz2", "z2z4_over_z4"])
def test_enumeration_matches_brute_force(fixture, request):
    module = request.getfixturevalue(fixture)
    assert elements(enumerate_submodules(module)) == elements(brute_force_submodules(module))


def test_sum_and_intersection_in_z6(z6):
    three = submodule(z6, [0, 3])
    two = submodule(z6, [0, 2, 4])
    assert submodule_sum(three, two).is_whole
    assert submodule_intersect(three, two).is_zero
    assert submodule_intersect(two, two) == two


def test_checked_constructor_rejects_non_submodule(z6):
    with pytest.raises(NotASubmoduleError):
        submodule(z6, [0, 2])


def test_generated_submodule(z2z4_over_z4):
    # (1, 0) and (0, 2) generate the elementary abelian part
    generated = generated_submodule(z2z4_over_z4, [4, 2])
    assert generated.elements == (0, 2, 4, 6)


LATTICE_MODULE = build_module(Z2Z4_OVER_Z4)
LATTICE = enumerate_submodules(LATTICE_MODULE)
submodule_ids = st.integers(min_value=0, max_value=len(LATTICE) - 1)


@settings(max_examples=60, deadline=None)
@given(submodule_ids, submodule_ids)
def test_lattice_operations_commute(a, b):
    x, y = LATTICE[a], LATTICE[b]
    assert submodule_sum(x, y) == submodule_sum(y, x)
    assert submodule_intersect(x, y) == submodule_intersect(y, x)


@settings(max_examples=60, deadline=None)
@given(submodule_ids, submodule_ids, submodule_ids)
def test_lattice_operations_associate(a, b, c):
    x, y, z = LATTICE[a], LATTICE[b], LATTICE[c]
    assert submodule_sum(submodule_sum(x, y), z) == submodule_sum(x, submodule_sum(y, z))
    assert submodule_intersect(submodule_intersect(x, y), z) == submodule_intersect(x, submodule_intersect(y, z))


@settings(max_examples=60, deadline=None)
@given(submodule_ids, submodule_ids)
def test_absorption_and_idempotence(a, b):
    x, y = LATTICE[a], LATTICE[b]
    assert submodule_sum(x, x) == x
    assert submodule_intersect(x, x) == x
    assert submodule_sum(x, submodule_intersect(x, y)) == x
    assert submodule_intersect(x, submodule_sum(x, y)) == x


# quotients and presentations

def test_quotient_of_z6(z6):
    quotient, projection = quotient_module(z6, submodule(z6, [0, 2, 4]))
    assert quotient.order == 2
    assert projection(3) != 0
    assert projection.rep(3) == 1
    assert projection.pull(zero_submodule(quotient)).elements == (0, 2, 4)


def test_quotient_by_zero_is_bijective(z6):
    quotient, projection = quotient_module(z6, zero_submodule(z6))
    assert quotient.order == 6
    assert sorted(projection.image.tolist()) == list(range(6))


def test_quotient_of_z4(z4):
    quotient, _ = quotient_module(z4, submodule(z4, [0, 2]))
    assert quotient.order == 2


def test_submodule_as_module_round_trip(z2z4_over_z4):
    sub = enumerate_submodules(z2z4_over_z4)[-2]
    presented, embedding = submodule_as_module(sub)
    assert presented.order == len(sub)
    assert embedding.push(enumerate_submodules(presented)[-1]) == sub


# colon operations and ideals

def test_colon_ideal(z6, z2xz2):
    assert colon_ideal(submodule(z6, [0, 2, 4])).elements == (0, 2, 4)
    assert len(colon_ideal(submodule(z6, range(6)))) == 6
    line = enumerate_submodules(z2xz2)[1]
    assert colon_ideal(line).elements == (0,)


def test_colon_submodule(z4, z6):
    assert colon_submodule(zero_submodule(z4), Ideal(z4.ring, [0, 2])).elements == (0, 2)
    assert colon_submodule(zero_submodule(z4), Ideal(z4.ring, [0])).is_whole
    assert colon_submodule(zero_submodule(z6), Ideal(z6.ring, [0, 3])).elements == (0, 2, 4)


def test_ideal_product_and_two_sided_ideals():
    ring = zn_ring(12)
    product = ideal_product(Ideal(ring, [0, 2, 4, 6, 8, 10]), Ideal(ring, [0, 3, 6, 9]))
    assert product.elements == (0, 6)
    assert len(two_sided_ideals(ring)) == len(enumerate_submodules(regular_module(ring)))


# radicals

def test_radicals_of_z6(z6):
    rads = radicals(z6)
    assert sorted(elements(rads.max_list)) == [(0, 2, 4), (0, 3)]
    assert rads.rad.is_zero
    assert rads.soc.is_whole


def test_radicals_of_z4(z4):
    rads = radicals(z4)
    assert elements(rads.max_list) == [(0, 2)]
    assert rads.rad.elements == (0, 2)
    assert rads.soc.elements == (0, 2)


def test_position_predicates(z4):
    subs = enumerate_submodules(z4)
    assert position_predicates(subs[2]).essential
    assert position_predicates(subs[0]).superfluous
    middle = position_predicates(subs[1])
    assert middle.essential and middle.superfluous
