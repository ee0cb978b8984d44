"""
Varieties V^fp(L) / X^fp(L), the fp-radical Rad^fp_M(L), minimal points above L
and the (complete) max-property.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional

from src.algebra.lattice import intersection_of
from src.algebra.module import FiniteModule
from src.algebra.radicals import radicals
from src.algebra.submodule import Submodule
from src.homs.invariance import is_fully_invariant
from src.spectra.spectrum import Spectrum, SpectrumPoint, spec_fp
from src.utils.errors import NotFullyInvariantError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Variety:
    V: FrozenSet[int]
    X: FrozenSet[int]


def variety(sub: Submodule, spectrum: Optional[Spectrum] = None) -> Variety:
    """Points containing L (V) and points not containing L (X)."""
    spectrum = spectrum or spec_fp(sub.parent)
    inside = frozenset(p.id for p in spectrum.points if sub <= p.submodule)
    return Variety(inside, frozenset(spectrum.ids) - inside)


def rad_fp(sub: Submodule, spectrum: Optional[Spectrum] = None) -> Submodule:
    """Intersection of the points containing L; the whole module when there are none."""
    spectrum = spectrum or spec_fp(sub.parent)
    return intersection_of(sub.parent, [p.submodule for p in spectrum.points if sub <= p.submodule])


def is_fp_radical(sub: Submodule, spectrum: Optional[Spectrum] = None) -> bool:
    return rad_fp(sub, spectrum) == sub


def closed_set_core(module: FiniteModule, point_ids, spectrum: Optional[Spectrum] = None) -> Submodule:
    """Intersection of the given points (the whole module for the empty set)."""
    spectrum = spectrum or spec_fp(module)
    wanted = set(point_ids)
    return intersection_of(module, [p.submodule for p in spectrum.points if p.id in wanted])


def minimal_above(sub: Submodule, spectrum: Optional[Spectrum] = None) -> List[SpectrumPoint]:
    """Minimal members of V^fp(L) under inclusion.

    Raises:
        NotFullyInvariantError: when L is not fully invariant
    """
    if not is_fully_invariant(sub):
        raise NotFullyInvariantError(f"{sub.label} is not fully invariant in {sub.parent.name}")
    spectrum = spectrum or spec_fp(sub.parent)
    above = [p for p in spectrum.points if sub <= p.submodule]
    minimal = [p for p in above if not any(q.submodule < p.submodule for q in above)]
    if not minimal:
        logger.warning(f"No fully prime submodule of {sub.parent.name} lies above {sub.label}")
    return minimal


@dataclass
class MaxProperty:
    L_e: Dict[int, Submodule]
    complete: bool
    plain: bool
    exhaustive: bool


def max_complement(module: FiniteModule, sub: Submodule, max_list: List[Submodule]) -> Submodule:
    """L^e: intersection of the maximal submodules other than L (M when L is the only one)."""
    return intersection_of(module, [k for k in max_list if k != sub])


def max_property(module: FiniteModule, max_list: Optional[List[Submodule]] = None) -> MaxProperty:
    """Complete max-property (L^e not inside L for every maximal L) and its subset form.

    The subset form is decided exhaustively while the number of maximal submodules
    is at most ``config.subset_cap``; with finitely many maximals both forms agree,
    so beyond the cap the complete form is reported for both.
    """
    max_list = radicals(module).max_list if max_list is None else max_list
    l_e = {k.id: max_complement(module, k, max_list) for k in max_list}
    complete = all(not l_e[k.id] <= k for k in max_list)

    exhaustive = len(max_list) <= module.config.subset_cap
    plain = complete
    if exhaustive:
        plain = True
        for k in max_list:
            others = [x for x in max_list if x != k]
            for size in range(1, len(others) + 1):
                for family in combinations(others, size):
                    if intersection_of(module, family) <= k:
                        plain = False
                        break
                if not plain:
                    break
            if not plain:
                break
    return MaxProperty(l_e, complete, plain, exhaustive)
