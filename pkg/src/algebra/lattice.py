"""
The submodule lattice of a finite module: enumeration, lattice operations and
whole-lattice tables (containment, meet, join).
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from src.algebra.submodule import Submodule, same_parent
from src.utils.errors import NotASubmoduleError, SizeCapError

logger = logging.getLogger(__name__)


def is_closed(module, elements: Sequence[int]) -> bool:
    """True when the element set contains 0 and is closed under addition and the action."""
    elems = np.asarray(sorted(set(int(e) for e in elements)), dtype=np.int64)
    if len(elems) == 0:
        return False
    mask = np.zeros(module.order, dtype=bool)
    mask[elems] = True
    return bool(mask[0] and mask[module.add[np.ix_(elems, elems)]].all() and mask[module.act[:, elems]].all())


def submodule(module, elements: Iterable[int]) -> Submodule:
    """Checked constructor: the elements must already form a submodule."""
    elements = list(elements)
    if not is_closed(module, elements):
        raise NotASubmoduleError(f"element set is not a submodule of {module.name}",
                                 witness={"elements": sorted(set(int(e) for e in elements))})
    return Submodule(module, elements)


def zero_submodule(module) -> Submodule:
    return Submodule(module, [0])


def whole_submodule(module) -> Submodule:
    return Submodule(module, range(module.order))


def cyclic_submodule(module, m: int) -> Submodule:
    """Rm = {rm : r in R}; already an additive subgroup since (r + s)m = rm + sm."""
    return Submodule(module, np.unique(module.act[:, int(m)]))


def generated_submodule(module, elements: Iterable[int]) -> Submodule:
    """Smallest submodule containing the given elements."""
    elements = np.asarray(list(elements), dtype=np.int64)
    if len(elements) == 0:
        return zero_submodule(module)
    orbit = np.unique(module.act[:, elements])
    return Submodule(module, module.group.span(int(x) for x in orbit))


def submodule_sum(a: Submodule, b: Submodule) -> Submodule:
    """A + B = {a + b}; both are subgroups so no further closure is needed."""
    same_parent(a, b)
    add = a.parent.add
    return Submodule(a.parent, np.unique(add[np.ix_(list(a.elements), list(b.elements))]))


def submodule_intersect(a: Submodule, b: Submodule) -> Submodule:
    same_parent(a, b)
    return Submodule(a.parent, a.members & b.members)


def sum_of(module, subs: Iterable[Submodule]) -> Submodule:
    result = zero_submodule(module)
    for s in subs:
        result = submodule_sum(result, s)
    return result


def intersection_of(module, subs: Iterable[Submodule]) -> Submodule:
    """Intersection of a family; the empty intersection is the whole module."""
    result = whole_submodule(module)
    for s in subs:
        result = submodule_intersect(result, s)
    return result


def _check_cap(module):
    cap = module.config.module_cap
    if module.order > cap:
        raise SizeCapError(f"module order {module.order} exceeds cap {cap}",
                           witness={"order": module.order, "cap": cap})


def _enumerate(module) -> List[Submodule]:
    _check_cap(module)
    add = module.add
    cyclics = sorted({tuple(np.unique(module.act[:, m]).tolist()) for m in range(module.order)},
                     key=lambda e: (len(e), e))
    family = set(cyclics)
    family.add((0,))
    frontier = list(family)
    while frontier:
        fresh = []
        for s in frontier:
            s_members = set(s)
            for c in cyclics:
                if s_members.issuperset(c):
                    continue
                joined = tuple(np.unique(add[np.ix_(list(s), list(c))]).tolist())
                if joined not in family:
                    family.add(joined)
                    fresh.append(joined)
        frontier = fresh
    ordered = sorted(family, key=lambda e: (len(e), e))
    logger.info(f"Enumerated {len(ordered)} submodules of {module.name}")
    return [Submodule(module, e) for e in ordered]


def enumerate_submodules(module) -> List[Submodule]:
    """All submodules in canonical order (cardinality, then lexicographic element set)."""
    return module.cached("submodules", lambda: _enumerate(module))


def submodule_index(module) -> Dict[Tuple[int, ...], int]:
    return module.cached("submodule_index",
                         lambda: {s.elements: i for i, s in enumerate(enumerate_submodules(module))})


def canonical(module, sub: Submodule) -> Submodule:
    """The enumerated instance equal to ``sub`` (shares cached attributes)."""
    return enumerate_submodules(module)[sub.id]


def brute_force_submodules(module) -> List[Submodule]:
    """Oracle: every subset containing 0 that is closed under both operations.

    Only meant for small modules (order at most ``config.oracle_cap``).
    """
    cap = module.config.oracle_cap
    if module.order > cap:
        raise SizeCapError(f"brute-force enumeration needs order <= {cap}, got {module.order}",
                           witness={"order": module.order, "cap": cap})
    others = list(range(1, module.order))
    found = []
    for size in range(len(others) + 1):
        for subset in combinations(others, size):
            elements = (0,) + subset
            if is_closed(module, elements):
                found.append(elements)
    found.sort(key=lambda e: (len(e), e))
    return [Submodule(module, e) for e in found]


@dataclass
class LatticeTables:
    """Whole-lattice tables over submodule ids.

    leq[a, b] is True when S_a is contained in S_b; meet and join hold ids.
    """

    indicator: np.ndarray
    leq: np.ndarray
    meet: np.ndarray
    join: np.ndarray

    @property
    def size(self) -> int:
        return len(self.leq)


def _tables(module) -> LatticeTables:
    subs = enumerate_submodules(module)
    index = submodule_index(module)
    n = len(subs)
    indicator = np.stack([s.indicator for s in subs])
    as_int = indicator.astype(np.int64)
    leq = (as_int @ (1 - as_int).T) == 0

    meet = np.zeros((n, n), dtype=np.int64)
    join = np.zeros((n, n), dtype=np.int64)
    add = module.add
    for a in range(n):
        for b in range(a, n):
            both = indicator[a] & indicator[b]
            meet[a, b] = meet[b, a] = index[tuple(np.flatnonzero(both).tolist())]
            summed = np.unique(add[np.ix_(list(subs[a].elements), list(subs[b].elements))])
            join[a, b] = join[b, a] = index[tuple(summed.tolist())]
    return LatticeTables(indicator, leq, meet, join)


def lattice_tables(module) -> LatticeTables:
    return module.cached("lattice_tables", lambda: _tables(module))


def maximal_submodules(module) -> List[Submodule]:
    """Maximal proper submodules in canonical order."""
    def build():
        subs = enumerate_submodules(module)
        leq = lattice_tables(module).leq
        proper = range(len(subs) - 1)
        return [subs[i] for i in proper
                if not any(leq[i, j] and i != j for j in proper)]
    return module.cached("maximal_submodules", build)


def simple_submodules(module) -> List[Submodule]:
    """Minimal non-zero submodules in canonical order."""
    def build():
        subs = enumerate_submodules(module)
        leq = lattice_tables(module).leq
        nonzero = range(1, len(subs))
        return [subs[i] for i in nonzero
                if not any(leq[j, i] and i != j for j in nonzero)]
    return module.cached("simple_submodules", build)


def is_chain(module) -> bool:
    leq = lattice_tables(module).leq
    return bool((leq | leq.T).all())
