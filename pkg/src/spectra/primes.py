"""
Prime and fully prime submodules.

Primeness is decided three independent ways (elementwise, by annihilators of
subquotients, by ideals) and the answers must agree.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from src.algebra.ideals import ideal_times_module, relative_colon, two_sided_ideals
from src.algebra.lattice import enumerate_submodules, lattice_tables, whole_submodule
from src.algebra.submodule import Submodule
from src.homs.invariance import fully_invariant, is_fully_invariant
from src.homs.star import star_product
from src.utils.errors import ConsistencyError, NotFullyInvariantError, NotProperError

logger = logging.getLogger(__name__)


@dataclass
class PrimeTests:
    elementwise: bool
    by_annihilators: bool
    by_ideals: bool
    witness: Optional[dict] = None


def _require_proper(sub: Submodule):
    if sub.is_whole:
        raise NotProperError(f"{sub.label} is the whole module {sub.parent.name}")


def prime_elementwise(sub: Submodule) -> Tuple[bool, Optional[dict]]:
    """rRm in K implies m in K or rM in K, for all r in R and m in M."""
    module = sub.parent
    ring = module.ring
    inside = sub.indicator
    # r R m in K, indexed [r, m]
    rrm = inside[module.act[ring.mul]].all(axis=1)
    rm_inside = inside[module.act].all(axis=1)
    bad = np.argwhere(rrm & ~inside[None, :] & ~rm_inside[:, None])
    if len(bad):
        r, m = (int(v) for v in bad[0])
        return False, {"r": r, "m": m}
    return True, None


def prime_by_annihilators(sub: Submodule) -> bool:
    """ann(L/K) = ann(M/K) for every submodule L properly containing K."""
    module = sub.parent
    whole = relative_colon(sub, whole_submodule(module))
    leq = lattice_tables(module).leq
    subs = enumerate_submodules(module)
    i = sub.id
    for j in np.flatnonzero(leq[i]):
        if j != i and relative_colon(sub, subs[j]) != whole:
            return False
    return True


def prime_by_ideals(sub: Submodule) -> bool:
    """IL in K implies L in K or IM in K, over two-sided ideals I and submodules L."""
    module = sub.parent
    whole = whole_submodule(module)
    for ideal in two_sided_ideals(module.ring):
        if ideal_times_module(ideal, whole) <= sub:
            continue
        for other in enumerate_submodules(module):
            if not other <= sub and ideal_times_module(ideal, other) <= sub:
                return False
    return True


def prime_tests(sub: Submodule) -> PrimeTests:
    """Run all three prime tests on a proper submodule and insist they agree."""
    _require_proper(sub)

    def build():
        elementwise, witness = prime_elementwise(sub)
        tests = PrimeTests(elementwise, prime_by_annihilators(sub), prime_by_ideals(sub), witness)
        if not (tests.elementwise == tests.by_annihilators == tests.by_ideals):
            raise ConsistencyError(f"prime tests disagree on {sub.label} in {sub.parent.name}",
                                   witness={"elementwise": tests.elementwise,
                                            "by_annihilators": tests.by_annihilators,
                                            "by_ideals": tests.by_ideals})
        return tests

    return sub.parent.cached(("prime", sub.elements), build)


def is_prime_in(sub: Submodule) -> bool:
    return prime_tests(sub).elementwise


def is_prime_by_ideals(sub: Submodule) -> bool:
    _require_proper(sub)
    return prime_by_ideals(sub)


def fully_prime_witness(sub: Submodule) -> Optional[Tuple[Submodule, Submodule]]:
    """First fully invariant pair (X, Y), neither inside K, with X * Y inside K."""
    _require_proper(sub)
    if not is_fully_invariant(sub):
        raise NotFullyInvariantError(f"{sub.label} is not fully invariant in {sub.parent.name}")
    outside = [x for x in fully_invariant(sub.parent).fi_list if not x <= sub]
    for x in outside:
        for y in outside:
            if star_product(x, y) <= sub:
                return x, y
    return None


def is_fully_prime_in(sub: Submodule) -> bool:
    """K proper fully invariant with X * Y in K forcing X in K or Y in K (X, Y fully invariant)."""
    return sub.parent.cached(("fully_prime", sub.elements), lambda: fully_prime_witness(sub) is None)
