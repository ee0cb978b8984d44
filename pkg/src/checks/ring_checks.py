"""
Checks on rings: the star product on ideals and Zariski-topology equivalences for Spec(R).
"""

import logging

from src.algebra.ideals import ideal_product, two_sided_ideals
from src.algebra.lattice import cyclic_submodule
from src.algebra.module import regular_module, right_regular_module
from src.checks.catalog import Subject
from src.checks.registry import check, degenerate, failed, passed
from src.homs.invariance import fully_invariant
from src.homs.star import star_product
from src.spectra.ring_spectrum import ring_spectrum
from src.spectra.varieties import variety
from src.topology.properties import is_discrete, is_t1, is_t2
from src.topology.space import build_topology, ring_topology

logger = logging.getLogger(__name__)


@check("ring_star_is_product", kind="ring")
def ring_star_is_product(subject: Subject):
    """In the left regular module the f.i. submodules are the two-sided ideals and I * J = IJ."""
    ring = subject.ring
    regular = regular_module(ring)
    ideals = two_sided_ideals(ring)
    fi_sets = {s.elements for s in fully_invariant(regular).fi_list}
    ideal_sets = {i.elements for i in ideals}
    if fi_sets != ideal_sets:
        return failed({"fully_invariant": sorted(fi_sets), "two_sided": sorted(ideal_sets)})
    pairs = 0
    for i in ideals:
        for j in ideals:
            star = star_product(i.submodule, j.submodule)
            product = ideal_product(i, j)
            if star.elements != product.elements:
                return failed({"I": list(i.elements), "J": list(j.elements),
                               "star": list(star.elements), "product": list(product.elements)})
            pairs += 1
    return passed(ideals=len(ideals), pairs=pairs)


def _finite_subcover(module):
    """Greedy choice of elements a whose X^fp(Ra) cover Spec^fp(M)."""
    topology = build_topology(module, "full")
    covered = frozenset()
    chosen = []
    for a in range(module.order):
        if covered == topology.whole:
            break
        x = variety(cyclic_submodule(module, a)).X
        if not x <= covered:
            chosen.append(a)
            covered |= x
    return {"top_fp": topology.is_topology, "subcover": chosen, "covers": covered == topology.whole}


@check("prop_ring_compact", kind="ring")
def prop_ring_compact(subject: Subject):
    """Compactness of Spec^fp of the regular modules; every finite space is compact."""
    ring = subject.ring
    return degenerate("infinite open cover", left=_finite_subcover(regular_module(ring)),
                      right=_finite_subcover(right_regular_module(ring)))


def _five_way(subject: Subject) -> dict:
    predicates = ring_spectrum(subject.ring).predicates
    topology = ring_topology(subject.ring)
    return {
        "zero_dimensional_finite_max": predicates.zero_dimensional,
        "pi_regular_max_complete": predicates.pi_regular and predicates.max_complete,
        "discrete": is_discrete(topology),
        "T2_finite": is_t2(topology),
        "T1_finite": is_t1(topology),
    }


@check("cor_pi_reg", kind="ring")
def cor_pi_reg(subject: Subject):
    """For left or right duo R: zero-dimensional, pi-regular with complete max-property, discrete, T2, T1 agree."""
    predicates = ring_spectrum(subject.ring).predicates
    if not (predicates.left_duo or predicates.right_duo):
        return degenerate("left or right duo ring")
    values = _five_way(subject)
    if len(set(values.values())) != 1:
        return failed(values)
    return passed(**values)


@check("cor_0_dim", kind="ring")
def cor_0_dim(subject: Subject):
    """For commutative R the same equivalences hold, and semisimple means von Neumann regular and semilocal."""
    predicates = ring_spectrum(subject.ring).predicates
    if not predicates.commutative:
        return degenerate("commutative ring")
    values = _five_way(subject)
    if len(set(values.values())) != 1:
        return failed({"part": 1, **values})
    vnr = predicates.von_neumann_regular
    semisimple = {
        "semisimple": predicates.semisimple,
        "vnr_semilocal": vnr and predicates.semilocal,
        "vnr_max_complete": vnr and predicates.max_complete,
        # finite rings are Noetherian and perfect
        "vnr_noetherian": vnr,
        "vnr_perfect": vnr,
    }
    if len(set(semisimple.values())) != 1:
        return failed({"part": 2, **semisimple})
    return passed(**values, **semisimple)
