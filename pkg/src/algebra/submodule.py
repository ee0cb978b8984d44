"""
Submodules as canonical sorted element sets of a parent module.
"""

from functools import cached_property
from typing import FrozenSet, Tuple

import numpy as np

from src.utils.errors import ParentMismatchError


class Submodule:
    """A submodule of ``parent``, stored as its sorted tuple of element indices.

    Two submodules are equal when they have the same parent object and the same
    elements. ``id`` is the position in the parent's canonical enumeration.
    """

    def __init__(self, parent, elements):
        self.parent = parent
        self.elements: Tuple[int, ...] = tuple(sorted(int(e) for e in set(elements)))

    def __repr__(self):
        return f"Submodule({self.label}, |M|={self.parent.order})"

    def __eq__(self, other):
        if not isinstance(other, Submodule):
            return NotImplemented
        return self.parent is other.parent and self.elements == other.elements

    def __hash__(self):
        return hash((id(self.parent), self.elements))

    def __len__(self):
        return len(self.elements)

    def __contains__(self, m) -> bool:
        return bool(self.indicator[int(m)])

    def __le__(self, other: "Submodule") -> bool:
        same_parent(self, other)
        return self.members <= other.members

    def __lt__(self, other: "Submodule") -> bool:
        same_parent(self, other)
        return self.members < other.members

    def __ge__(self, other: "Submodule") -> bool:
        return other <= self

    def __gt__(self, other: "Submodule") -> bool:
        return other < self

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def sort_key(self):
        return len(self.elements), self.elements

    @property
    def is_zero(self) -> bool:
        return len(self.elements) == 1

    @property
    def is_whole(self) -> bool:
        return len(self.elements) == self.parent.order

    @property
    def is_proper(self) -> bool:
        return not self.is_whole

    @cached_property
    def members(self) -> FrozenSet[int]:
        return frozenset(self.elements)

    @cached_property
    def indicator(self) -> np.ndarray:
        mask = np.zeros(self.parent.order, dtype=bool)
        mask[list(self.elements)] = True
        mask.setflags(write=False)
        return mask

    @cached_property
    def id(self) -> int:
        from src.algebra.lattice import submodule_index
        return submodule_index(self.parent)[self.elements]

    @property
    def label(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"


def same_parent(a: Submodule, b: Submodule):
    if a.parent is not b.parent:
        raise ParentMismatchError(f"submodules of different modules: {a.parent.name} and {b.parent.name}")
