"""
Prime and fully prime submodules, Spec^fp, varieties and ring spectra.
"""

import pytest

from src.algebra.lattice import enumerate_submodules, submodule, whole_submodule, zero_submodule
from src.algebra.module import build_module, regular_module
from src.algebra.ring import build_ring, zn_ring
from src.homs.star import star_product
from src.spectra.primes import fully_prime_witness, is_fully_prime_in, prime_tests
from src.spectra.ring_spectrum import ring_spectrum
from src.spectra.spectrum import spec_fp
from src.spectra.varieties import max_property, minimal_above, rad_fp, variety
from src.utils.errors import NotFullyInvariantError, NotProperError

Z4_Z9_OVER_Z36 = {"ring": {"kind": "Zn", "n": 36}, "kind": "matrices", "add_cyclic": [4, 9],
                  "matrices": [[[1, 0], [0, 1]]]}


def point_elements(spectrum):
    return [p.submodule.elements for p in spectrum.points]


# primeness

def test_prime_submodules(z6, z4):
    tests = prime_tests(submodule(z6, [0, 2, 4]))
    assert tests.elementwise and tests.by_annihilators and tests.by_ideals
    tests = prime_tests(zero_submodule(z4))
    assert not tests.elementwise
    assert not tests.by_annihilators
    assert tests.witness is not None


def test_zero_is_prime_in_simple_module():
    assert prime_tests(zero_submodule(regular_module(zn_ring(5)))).elementwise


def test_prime_requires_proper_submodule(z6):
    with pytest.raises(NotProperError):
        prime_tests(whole_submodule(z6))


def test_fully_prime_submodules(z6, z4, z2xz2):
    assert is_fully_prime_in(submodule(z6, [0, 2, 4]))
    assert not is_fully_prime_in(zero_submodule(z6))
    assert is_fully_prime_in(zero_submodule(z2xz2))
    assert not is_fully_prime_in(zero_submodule(z4))


def test_fully_prime_witness(z6):
    zero = zero_submodule(z6)
    x, y = fully_prime_witness(zero)
    assert not x.is_zero and not y.is_zero
    assert star_product(x, y) <= zero
    assert fully_prime_witness(submodule(z6, [0, 3])) is None


# Spec^fp

def test_spectrum_of_z6(z6):
    spectrum = spec_fp(z6)
    assert point_elements(spectrum) == [(0, 3), (0, 2, 4)]
    assert spectrum.ids == [1, 2]
    assert spectrum.rad_fp.is_zero
    assert all(p.maximal and p.prime and p.minimal_in_spec for p in spectrum.points)


def test_spectrum_of_z4(z4):
    spectrum = spec_fp(z4)
    assert point_elements(spectrum) == [(0, 2)]
    assert spectrum.rad_fp.elements == (0, 2)


def test_spectrum_of_z2_squared(z2xz2):
    spectrum = spec_fp(z2xz2)
    assert point_elements(spectrum) == [(0,)]
    assert spectrum.rad_fp.is_zero
    assert not spectrum.points[0].maximal


def test_spectrum_without_point(z6):
    spectrum = spec_fp(z6)
    edited = spectrum.without(2)
    assert edited.ids == [1]
    assert edited.rad_fp.elements == (0, 3)
    assert spec_fp(z6).ids == [1, 2]


def test_spectrum_serialises(z6):
    record = spec_fp(z6).to_dict()
    assert record["rad_fp"] == [0]
    assert [p["id"] for p in record["points"]] == [1, 2]


# varieties

def test_varieties(z6):
    zero = variety(zero_submodule(z6))
    assert zero.V == frozenset({1, 2})
    assert not zero.X
    three = variety(submodule(z6, [0, 3]))
    assert three.V == frozenset({1})
    assert three.X == frozenset({2})
    assert not variety(whole_submodule(z6)).V


def test_fp_radical(z4, z6):
    assert rad_fp(zero_submodule(z4)).elements == (0, 2)
    assert rad_fp(whole_submodule(z6)).is_whole
    for point in spec_fp(z6).points:
        assert rad_fp(point.submodule) == point.submodule


def test_minimal_above(z6, z4, z2xz2):
    assert [p.id for p in minimal_above(zero_submodule(z6))] == [1, 2]
    assert [p.id for p in minimal_above(submodule(z4, [0, 2]))] == [1]
    with pytest.raises(NotFullyInvariantError):
        minimal_above(enumerate_submodules(z2xz2)[1])


def test_max_property(z6, z4):
    record = max_property(z6)
    assert record.complete
    assert record.L_e[1].elements == (0, 2, 4)
    assert max_property(z4).complete


def test_max_property_of_z4_z9():
    module = build_module(Z4_Z9_OVER_Z36)
    assert module.order == 36
    assert max_property(module).complete


# ring spectra

def test_ring_spectrum_z6():
    spectrum = ring_spectrum(zn_ring(6))
    assert sorted(i.elements for i in spectrum.spec) == [(0, 2, 4), (0, 3)]
    assert spectrum.predicates.von_neumann_regular
    assert spectrum.predicates.semisimple
    assert spectrum.predicates.zero_dimensional


def test_ring_spectrum_z4():
    spectrum = ring_spectrum(zn_ring(4))
    assert [i.elements for i in spectrum.spec] == [(0, 2)]
    assert spectrum.predicates.pi_regular
    assert not spectrum.predicates.von_neumann_regular
    assert not spectrum.predicates.semisimple


def test_ring_spectrum_of_field():
    spectrum = ring_spectrum(zn_ring(5))
    assert [i.elements for i in spectrum.spec] == [(0,)]
    predicates = spectrum.predicates
    assert predicates.pi_regular and predicates.von_neumann_regular and predicates.semisimple
    assert predicates.prime_ring


def test_ring_spectrum_of_upper_triangular(ut2):
    spectrum = ring_spectrum(ut2)
    assert spectrum.predicates.spec_is_left_spec_fp
    assert not spectrum.predicates.commutative
    assert len(spectrum.spec) == len(spectrum.maximal_ideals)


def prime_divisors(n):
    return [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]


@pytest.mark.parametrize("n", range(2, 31))
def test_spectrum_of_zn_is_primes_dividing_n(n):
    expected = sorted(tuple(range(0, n, p)) for p in prime_divisors(n))
    assert sorted(point_elements(spec_fp(regular_module(zn_ring(n))))) == expected
    assert sorted(i.elements for i in ring_spectrum(zn_ring(n)).spec) == expected


def test_ring_spectrum_of_product():
    ring = build_ring({"kind": "product", "factors": [{"kind": "Zn", "n": 2}, {"kind": "Zn", "n": 4}]})
    spectrum = ring_spectrum(ring)
    assert len(spectrum.spec) == 2
    assert not spectrum.predicates.von_neumann_regular
