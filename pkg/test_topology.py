"""
Closed sets of Spec^fp, closure, separation and irreducibility, the specialization order and DOT export.
"""

import pytest

from src.algebra.ring import zn_ring
from src.spectra.spectrum import spec_fp
from src.topology.dot import export_dot, to_dot
from src.topology.irreducible import irreducible_sets
from src.topology.properties import (
    basis_check,
    is_connected_subset,
    is_irreducible_subset,
    is_ultraconnected,
    minimal_open,
    properties,
)
from src.topology.space import build_topology, closure, ring_topology, topology_from_family
from src.topology.specialization import is_locally_finite, specialization_order
from src.utils.errors import ConsistencyError, EmptySpaceError, NotATopologyError


def closed(topology):
    return [sorted(c) for c in topology.closed_sets]


@pytest.fixture
def broken():
    """Three points whose closed-set family misses the union {1, 2}."""
    family = {frozenset(): [], frozenset({1}): [], frozenset({2}): [], frozenset({1, 2, 3}): []}
    return topology_from_family([1, 2, 3], family, "full")


# closed sets

def test_z6_closed_sets(z6):
    topology = build_topology(z6)
    assert topology.points == (1, 2)
    assert closed(topology) == [[], [1], [2], [1, 2]]
    assert topology.is_topology
    assert topology.preimages[frozenset()] == [3]


def test_z4_closed_sets(z4):
    topology = build_topology(z4)
    assert closed(topology) == [[], [1]]
    assert topology.preimages[frozenset({1})] == [0, 1]


def test_z2_squared_full_family(z2xz2):
    topology = build_topology(z2xz2, "full")
    assert topology.is_topology
    assert closed(topology) == [[], [0]]
    assert topology.preimages[frozenset()] == [1, 2, 3, 4]


def test_z2_squared_fi_family(z2xz2):
    topology = build_topology(z2xz2, "fi")
    assert closed(topology) == [[], [0]]
    assert topology.preimages[frozenset()] == [4]


def test_unknown_variant(z6):
    with pytest.raises(ValueError):
        build_topology(z6, "coarse")


def test_topology_of_edited_spectrum(z6):
    topology = build_topology(spec_fp(z6).without(2))
    assert topology.points == (1,)
    assert closed(topology) == [[], [1]]
    assert build_topology(z6).points == (1, 2)


def test_union_witness(broken):
    assert not broken.is_topology
    assert broken.witness == (frozenset({1}), frozenset({2}))
    with pytest.raises(NotATopologyError):
        closure(broken, [1])
    with pytest.raises(NotATopologyError):
        properties(broken)


def test_family_without_empty_set():
    with pytest.raises(ConsistencyError):
        topology_from_family([1], {frozenset({1}): []}, "full")


def test_ring_topology():
    topology = ring_topology(zn_ring(6))
    assert topology.points == (1, 2)
    assert len(topology.closed_sets) == 4
    assert properties(topology).discrete


# closure and open sets

def test_closure(z6, z2xz2):
    topology = build_topology(z6)
    assert closure(topology, [1]) == frozenset({1})
    assert closure(topology, []) == frozenset()
    assert closure(build_topology(z2xz2), [0]) == frozenset({0})


def test_open_sets(z6):
    topology = build_topology(z6)
    assert topology.is_open([1]) and topology.is_closed([1])
    assert minimal_open(topology, 1) == frozenset({1})
    assert len(topology.open_sets()) == 4


# properties

def test_z6_properties(z6):
    props = properties(build_topology(z6))
    assert props.discrete and props.t2 and props.t1 and props.t0
    assert not props.connected
    assert not props.irreducible
    assert not props.ultraconnected
    assert props.sober
    assert props.basis_check


def test_z4_properties(z4):
    props = properties(build_topology(z4))
    assert props.irreducible
    assert props.ultraconnected
    assert props.connected
    assert props.generic_points == {"1": [1]}
    assert props.to_dict()["T2"]


def test_empty_space():
    topology = topology_from_family([], {frozenset(): [0]}, "full")
    props = properties(topology)
    assert props.irreducible is None
    assert props.ultraconnected is None
    assert any(note.startswith("EmptySpace") for note in props.notes)
    with pytest.raises(EmptySpaceError):
        is_ultraconnected(topology)


def test_subspaces(z6):
    topology = build_topology(z6)
    assert is_irreducible_subset(topology, [1])
    assert not is_irreducible_subset(topology, [1, 2])
    assert not is_connected_subset(topology, [1, 2])
    assert is_connected_subset(topology, [2])


def test_basis_needs_a_module(broken):
    assert basis_check(broken) is None


# irreducible sets

def test_irreducible_sets_of_z6(z6):
    found = irreducible_sets(build_topology(z6))
    assert [sorted(c) for c, _ in found.closed_irreducibles] == [[1], [2]]
    assert [g for _, g in found.closed_irreducibles] == [[1], [2]]
    assert [sorted(c) for c in found.components] == [[1], [2]]
    assert found.criterion_agrees


def test_irreducible_sets_of_z2_squared(z2xz2):
    found = irreducible_sets(build_topology(z2xz2))
    assert [sorted(c) for c in found.components] == [[0]]
    assert found.criterion is None


# specialization order and local finiteness

def test_specialization_antichain(z6):
    order = specialization_order(build_topology(z6))
    assert order.edges() == []
    assert sorted(order.hasse.nodes()) == [1, 2]


def test_local_finiteness(z6):
    result = is_locally_finite(build_topology(z6), [{1}, {2}, {1, 2}])
    assert result.value
    assert result.hits == {1: 2, 2: 2}
    assert result.neighbourhoods[1] == frozenset({1})


def test_local_finiteness_bound(z6, z4):
    family = [{1}, {2}, {1, 2}]
    strict = is_locally_finite(build_topology(z6), family, bound=1)
    assert not strict.value
    assert strict.offenders == [1, 2]
    assert is_locally_finite(build_topology(z6), family, bound=2).value
    single = is_locally_finite(build_topology(z4), [{1}, {1}], bound=1)
    assert not single.value
    assert single.hits == {1: 2}


def test_dot_output(z6, tmp_path):
    topology = build_topology(z6)
    order = specialization_order(topology)
    text = to_dot(order, topology, "Z6")
    assert text.startswith('digraph "Z6" {')
    assert '"1" [label=' in text
    assert "shape = box" in text
    assert "->" not in text

    target = tmp_path / "graphs" / "z6.gv"
    export_dot(order, topology, str(target), "Z6")
    assert target.read_text(encoding="utf-8") == text
