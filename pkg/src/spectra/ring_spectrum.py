"""
Spec(R) of two-sided prime ideals and ring-level predicates.
"""

import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List

import numpy as np

from src.algebra.ideals import Ideal, ideal_of, left_ideals, two_sided_ideals
from src.algebra.lattice import enumerate_submodules
from src.algebra.module import regular_module, right_regular_module
from src.algebra.radicals import radicals
from src.algebra.ring import FiniteRing
from src.spectra.spectrum import spec_fp
from src.utils.errors import ConsistencyError

logger = logging.getLogger(__name__)


@dataclass
class RingPredicates:
    commutative: bool
    pi_regular: bool
    zero_dimensional: bool
    von_neumann_regular: bool
    semisimple: bool
    left_duo: bool
    right_duo: bool
    semilocal: bool
    max_complete: bool
    prime_ring: bool
    spec_is_left_spec_fp: bool
    spec_is_right_spec_fp: bool


@dataclass
class RingSpectrum:
    ring: FiniteRing
    spec: List[Ideal]
    maximal_ideals: List[Ideal]
    jacobson_radical: Ideal
    predicates: RingPredicates
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ring": self.ring.name,
            "order": self.ring.order,
            "spec": [list(i.elements) for i in self.spec],
            "maximal_ideals": [list(i.elements) for i in self.maximal_ideals],
            "jacobson_radical": list(self.jacobson_radical.elements),
            "predicates": asdict(self.predicates),
        }


def is_prime_ideal(ideal: Ideal) -> bool:
    """Proper two-sided I with aRb in I forcing a in I or b in I."""
    if ideal.is_whole:
        return False
    ring = ideal.ring
    mul = ring.mul
    # a r b for [a, r, b]
    arb = ideal.indicator[mul[mul[:, :, None], np.arange(ring.order)[None, None, :]]].all(axis=1)
    inside = ideal.indicator
    return not bool((arb & ~inside[:, None] & ~inside[None, :]).any())


def _solvable(ring: FiniteRing, a: int, n: int) -> bool:
    """a^n = a^n x a^n for some x."""
    p = ring.power(a, n)
    return bool((ring.mul[ring.mul[p, :], p] == p).any())


def is_pi_regular(ring: FiniteRing) -> bool:
    return all(any(_solvable(ring, a, n) for n in range(1, ring.order + 1)) for a in range(ring.order))


def is_von_neumann_regular(ring: FiniteRing) -> bool:
    return all(_solvable(ring, a, 1) for a in range(ring.order))


def maximal_two_sided(ring: FiniteRing) -> List[Ideal]:
    ideals = [i for i in two_sided_ideals(ring) if not i.is_whole]
    return [i for i in ideals if not any(i < j for j in ideals)]


def max_complete_ideals(maximal: List[Ideal]) -> bool:
    """I^e = intersection of the other maximal ideals is never inside I."""
    for i in maximal:
        members = None
        for j in maximal:
            if j != i:
                members = j.members if members is None else members & j.members
        if members is not None and members <= i.members:
            return False
    return True


def _ring_spectrum(ring: FiniteRing) -> RingSpectrum:
    ideals = two_sided_ideals(ring)
    spec = [i for i in ideals if is_prime_ideal(i)]
    maximal = maximal_two_sided(ring)
    jacobson = ideal_of(radicals(regular_module(ring)).rad)

    left = left_ideals(ring)
    right_side = right_regular_module(ring)
    right = [ideal_of(s) for s in enumerate_submodules(right_side)]
    left_duo = all(i.is_right for i in left)
    # right ideals of R are the left ideals of R^op; two-sided means closed under left mult in R
    right_duo = all(Ideal(ring, i.elements).is_left for i in right)

    left_fp = {p.submodule.elements for p in spec_fp(regular_module(ring)).points}
    right_fp = {p.submodule.elements for p in spec_fp(right_side).points}
    spec_sets = {i.elements for i in spec}
    if left_fp != spec_sets:
        raise ConsistencyError(f"Spec({ring.name}) differs from Spec^fp of its left regular module",
                               witness={"spec": sorted(spec_sets), "spec_fp": sorted(left_fp)})

    predicates = RingPredicates(
        commutative=ring.is_commutative(),
        pi_regular=is_pi_regular(ring),
        zero_dimensional=all(p in maximal for p in spec),
        von_neumann_regular=is_von_neumann_regular(ring),
        semisimple=jacobson.is_zero,
        left_duo=left_duo,
        right_duo=right_duo,
        semilocal=True,
        max_complete=max_complete_ideals(maximal),
        prime_ring=any(p.is_zero for p in spec),
        spec_is_left_spec_fp=left_fp == spec_sets,
        spec_is_right_spec_fp=right_fp == spec_sets,
    )
    notes = ["semilocal holds for every finite ring"]
    if not predicates.spec_is_right_spec_fp:
        notes.append("Spec^fp(R_R) differs from Spec(R)")
    logger.info(f"Spec({ring.name}) has {len(spec)} prime ideals")
    return RingSpectrum(ring, spec, maximal, jacobson, predicates, notes)


def ring_spectrum(ring: FiniteRing) -> RingSpectrum:
    return ring.cached("ring_spectrum", lambda: _ring_spectrum(ring))

