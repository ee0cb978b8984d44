"""
Ideals of a finite ring and the colon operations between ideals and submodules.
"""

import logging
from functools import cached_property
from typing import FrozenSet, List, Optional, Tuple

import numpy as np

from src.algebra.lattice import enumerate_submodules, is_closed
from src.algebra.module import FiniteModule, regular_module
from src.algebra.ring import FiniteRing
from src.algebra.submodule import Submodule
from src.utils.errors import NotASubmoduleError, ParentMismatchError

logger = logging.getLogger(__name__)


class Ideal:
    """An additive subgroup of R with its sidedness flags recomputed from the tables."""

    def __init__(self, ring: FiniteRing, elements):
        self.ring = ring
        self.elements: Tuple[int, ...] = tuple(sorted(int(e) for e in set(elements)))

    def __hash__(self):
        return hash((id(self.ring), self.elements))

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring is other.ring and self.elements == other.elements

    def __len__(self):
        return len(self.elements)

    def __le__(self, other: "Ideal") -> bool:
        return self.members <= other.members

    def __lt__(self, other: "Ideal") -> bool:
        return self.members < other.members

    @cached_property
    def members(self) -> FrozenSet[int]:
        return frozenset(self.elements)

    @cached_property
    def indicator(self) -> np.ndarray:
        mask = np.zeros(self.ring.order, dtype=bool)
        mask[list(self.elements)] = True
        return mask

    @cached_property
    def is_left(self) -> bool:
        return bool(self.indicator[self.ring.mul[:, list(self.elements)]].all())

    @cached_property
    def is_right(self) -> bool:
        return bool(self.indicator[self.ring.mul[list(self.elements), :]].all())

    @property
    def is_two_sided(self) -> bool:
        return self.is_left and self.is_right

    @property
    def is_zero(self) -> bool:
        return len(self.elements) == 1

    @property
    def is_whole(self) -> bool:
        return len(self.elements) == self.ring.order

    @property
    def submodule(self) -> Submodule:
        """The ideal as a submodule of the left regular module (left ideals only)."""
        if not self.is_left:
            raise NotASubmoduleError(f"ideal {self.label} of {self.ring.name} is not a left ideal")
        return Submodule(regular_module(self.ring), self.elements)

    @property
    def label(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"

    def __repr__(self):
        sides = "two-sided" if self.is_two_sided else ("left" if self.is_left else
                                                        "right" if self.is_right else "additive")
        return f"Ideal({self.label}, {sides})"


def ideal_of(sub: Submodule) -> Ideal:
    """A submodule of a regular module, read as a (left) ideal of its ring."""
    return Ideal(sub.parent.ring, sub.elements)


def colon_ideal(sub: Submodule, module: Optional[FiniteModule] = None) -> Ideal:
    """(L :_R M) = {r in R : rM contained in L}."""
    module = module or sub.parent
    if sub.parent is not module:
        raise ParentMismatchError(f"{sub.label} is not a submodule of {module.name}")
    inside = sub.indicator[module.act].all(axis=1)
    return Ideal(module.ring, np.flatnonzero(inside))


def annihilator(sub: Submodule) -> Ideal:
    """(0 :_R L) = {r in R : rL = 0}."""
    module = sub.parent
    kills = (module.act[:, list(sub.elements)] == 0).all(axis=1)
    return Ideal(module.ring, np.flatnonzero(kills))


def relative_colon(sub: Submodule, over: Submodule) -> Ideal:
    """{r in R : r * over contained in sub}; the annihilator of over/sub when sub <= over."""
    module = sub.parent
    inside = sub.indicator[module.act[:, list(over.elements)]].all(axis=1)
    return Ideal(module.ring, np.flatnonzero(inside))


def colon_submodule(sub: Submodule, ideal: Ideal) -> Submodule:
    """(L :_M I) = {m in M : Im contained in L}.

    Raises:
        NotASubmoduleError: when the set is not closed (possible for one-sided I)
    """
    module = sub.parent
    if ideal.ring is not module.ring and not ideal.ring.same_as(module.ring):
        raise ParentMismatchError(f"ideal of {ideal.ring.name} used with a module over {module.ring.name}")
    inside = sub.indicator[module.act[list(ideal.elements), :]].all(axis=0)
    elements = np.flatnonzero(inside)
    if not is_closed(module, elements):
        raise NotASubmoduleError(f"({sub.label} :_M {ideal.label}) is not a submodule",
                                 witness={"elements": elements.tolist()})
    return Submodule(module, elements)


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    """IJ: additive closure of all products ij."""
    ring = a.ring
    products = np.unique(ring.mul[np.ix_(list(a.elements), list(b.elements))])
    return Ideal(ring, ring.group.span(int(x) for x in products))


def ideal_times_module(ideal: Ideal, sub: Submodule) -> Submodule:
    """IL: additive closure of all il; a submodule whenever I is a left ideal."""
    module = sub.parent
    products = np.unique(module.act[np.ix_(list(ideal.elements), list(sub.elements))])
    return Submodule(module, module.group.span(int(x) for x in products))


def two_sided_ideals(ring: FiniteRing) -> List[Ideal]:
    """Two-sided ideals in the canonical order of the left regular module's lattice."""
    def build():
        regular = regular_module(ring)
        ideals = [ideal_of(s) for s in enumerate_submodules(regular)]
        return [i for i in ideals if i.is_right]
    return ring.cached("two_sided_ideals", build)


def left_ideals(ring: FiniteRing) -> List[Ideal]:
    return ring.cached("left_ideals",
                       lambda: [ideal_of(s) for s in enumerate_submodules(regular_module(ring))])
