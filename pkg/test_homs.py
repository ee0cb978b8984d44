"""
Hom groups, endomorphism rings, full invariance, the star product and module classes.
"""

from concurrent.futures import ThreadPoolExecutor

import pytest

from src.algebra.lattice import enumerate_submodules, submodule, whole_submodule, zero_submodule
from src.algebra.module import build_module, regular_module
from src.algebra.ring import zn_ring
from src.checks.catalog import default_catalog
from src.homs.classify import classify_module, ufi_qfi
from src.homs.cogen import cogen_gen, is_cogenerated_by
from src.homs.endo import endo_ring
from src.homs.hom import brute_force_homs, hom_group
from src.homs.invariance import fully_invariant
from src.homs.projective import is_self_projective, is_self_projective_bruteforce
from src.homs.star import star_product, star_product_bruteforce
from src.utils.config import DEFAULT_CONFIG

# catalog modules small enough for the brute-force oracles
SMALL_MODULES = [
    (entry.name, module)
    for entry, module in ((e, build_module(e.spec)) for e in default_catalog() if e.kind == "module")
    if module.order <= DEFAULT_CONFIG.oracle_cap
]
SAME_RING_PAIRS = [
    pytest.param(m, n, id=f"{a} -> {b}")
    for a, m in SMALL_MODULES
    for b, n in SMALL_MODULES
    if m.ring.same_as(n.ring)
]


def ids(subs):
    return [s.id for s in subs]


def test_hom_into_submodule(z6):
    assert hom_group(z6, submodule(z6, [0, 2, 4])).group_order == 3


def test_hom_into_zero(z6):
    hom = hom_group(z6, zero_submodule(z6))
    assert hom.group_order == 1
    assert hom.generators == []


def test_linear_functionals_on_z2_squared(z2xz2):
    assert hom_group(z2xz2, regular_module(z2xz2.ring)).group_order == 4


@pytest.mark.parametrize("fixture", ["z6", "z4", "z2xz2", "z2z4_over_z4"])
def test_endomorphisms_match_brute_force(fixture, request):
    module = request.getfixturevalue(fixture)
    hom = hom_group(module, module)
    tables = sorted(tuple(t.tolist()) for t in hom.element_tables())
    assert tables == brute_force_homs(module, module)
    assert hom.group_order == len(tables)


def test_small_catalog_has_cross_pairs():
    assert len(SMALL_MODULES) >= 15
    assert len(SAME_RING_PAIRS) > len(SMALL_MODULES)


@pytest.mark.parametrize("source, target", SAME_RING_PAIRS)
def test_homs_between_catalog_modules_match_brute_force(source, target):
    hom = hom_group(source, target)
    tables = sorted(tuple(t.tolist()) for t in hom.element_tables())
    assert tables == brute_force_homs(source, target)
    assert hom.group_order == len(tables)


@pytest.mark.parametrize("module", [pytest.param(m, id=name) for name, m in SMALL_MODULES])
def test_star_products_of_catalog_module_match_brute_force(module):
    subs = enumerate_submodules(module)
    for x in subs:
        for y in subs:
            assert star_product(x, y) == star_product_bruteforce(x, y)


def test_hom_tables_shared_across_threads(z2xz2):
    hom = hom_group(z2xz2, z2xz2)
    with ThreadPoolExecutor(max_workers=4) as pool:
        results = list(pool.map(lambda _: hom.elements(), range(8)))
    assert all(r is results[0] for r in results)
    assert len(results[0]) == 16
    assert hom.generator_tables() is hom.generator_tables()


def test_endomorphism_rings(z6, z2xz2):
    assert endo_ring(z6).order == 6
    assert endo_ring(z6).is_commutative()
    assert endo_ring(regular_module(zn_ring(2))).order == 2
    end = endo_ring(z2xz2)
    assert end.order == 16
    assert not end.is_commutative()
    assert end.is_associative()


def test_fully_invariant_z6(z6):
    fi = fully_invariant(z6)
    assert len(fi.fi_list) == 4
    assert fi.is_duo


def test_fully_invariant_z2_squared(z2xz2):
    fi = fully_invariant(z2xz2)
    assert [s.elements for s in fi.fi_list] == [(0,), (0, 1, 2, 3)]
    assert not fi.is_duo


def test_z4_is_duo(z4):
    assert fully_invariant(z4).is_duo


def test_star_products(z6, z4):
    assert star_product(submodule(z6, [0, 3]), submodule(z6, [0, 2, 4])).is_zero
    two = submodule(z4, [0, 2])
    assert star_product(two, two).is_zero
    for sub in enumerate_submodules(z6):
        assert star_product(sub, whole_submodule(z6)) == sub


def test_star_product_matches_brute_force(z2z4_over_z4):
    subs = enumerate_submodules(z2z4_over_z4)
    for x in subs:
        for y in subs:
            assert star_product(x, y) == star_product_bruteforce(x, y)


def test_self_projectivity(z6, z2xz2, z2z4_over_z4):
    assert is_self_projective(z6)
    assert is_self_projective(z2xz2)
    assert is_self_projective(z2z4_over_z4) == is_self_projective_bruteforce(z2z4_over_z4)


def test_cogeneration(z2xz2, z4):
    line = enumerate_submodules(z2xz2)[1]
    assert cogen_gen(z2xz2, line).cogenerated
    assert not is_cogenerated_by(z4, submodule(z4, [0, 2]))
    whole = cogen_gen(z4, whole_submodule(z4))
    assert whole.cogenerated and whole.generated


def test_classify_z6(z6):
    record = classify_module(z6)
    assert record.multiplication
    assert record.duo
    assert record.spcd
    assert record.semisimple
    assert not record.hollow


def test_classify_z4(z4):
    record = classify_module(z4)
    assert record.local
    assert record.hollow
    assert record.uniserial
    assert record.spcd
    assert not record.semisimple


def test_classify_z2_squared(z2xz2):
    record = classify_module(z2xz2)
    assert not record.duo
    assert record.semisimple
    assert not record.multiplication


def test_invariant_families_of_z4(z4):
    families = ufi_qfi(zero_submodule(z4))
    assert ids(families.U_fi) == ids(fully_invariant(z4).fi_list)
    assert ids(families.Q_fi) == ids(fully_invariant(z4).fi_list)
    families = ufi_qfi(enumerate_submodules(z4)[1])
    assert ids(families.U_fi) == [1, 2]
    assert ids(families.Q_fi) == [1, 2]
