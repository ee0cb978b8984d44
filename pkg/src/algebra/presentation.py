"""
Re-presenting quotients and submodules as stand-alone modules.

Both constructions compute a fresh cyclic decomposition from the Smith normal
form of a relation lattice, so the results are ordinary FiniteModules with
mixed-radix element indices of their own.
"""

import logging
from dataclasses import dataclass
from math import lcm
from typing import List, Sequence, Tuple

import numpy as np

from src.algebra.groups import AbelianGroup
from src.algebra.module import FiniteModule
from src.algebra.submodule import Submodule
from src.utils.errors import ConsistencyError, ParentMismatchError, ZeroModuleError
from src.utils.smith import congruence_solutions, smith_normal_form

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class Projection:
    """Canonical epimorphism M -> M/L.

    ``image[m]`` is the quotient element of m and ``representative[q]`` the least
    element index of the coset q, so rep(m + L) = representative[image[m]].
    """

    source: FiniteModule
    target: FiniteModule
    kernel: Submodule
    image: np.ndarray
    representative: np.ndarray

    def __call__(self, m: int) -> int:
        return int(self.image[m])

    def rep(self, m: int) -> int:
        return int(self.representative[self.image[m]])

    def push(self, sub: Submodule) -> Submodule:
        return Submodule(self.target, np.unique(self.image[list(sub.elements)]))

    def pull(self, sub: Submodule) -> Submodule:
        """Preimage of a submodule of M/L; always contains L."""
        return Submodule(self.source, np.flatnonzero(sub.indicator[self.image]))


@dataclass(eq=False)
class Embedding:
    """Inclusion of a submodule presented as its own module K into the parent M.

    ``image[k]`` is the parent index of k; ``inverse[m]`` is -1 outside the submodule.
    """

    source: FiniteModule
    target: FiniteModule
    submodule: Submodule
    image: np.ndarray
    inverse: np.ndarray

    def push(self, sub: Submodule) -> Submodule:
        return Submodule(self.target, self.image[list(sub.elements)])

    def pull(self, sub: Submodule) -> Submodule:
        inside = [e for e in sub.elements if self.inverse[e] >= 0]
        return Submodule(self.source, self.inverse[inside])


def additive_generators(group: AbelianGroup, elements: Sequence[int]) -> List[int]:
    """Greedy generating set of the subgroup formed by ``elements``."""
    generators = []
    present = np.zeros(group.order, dtype=bool)
    present[0] = True
    for e in elements:
        if not present[e]:
            generators.append(int(e))
            present[group.span(generators)] = True
    return generators


def _quotient(module: FiniteModule, sub: Submodule) -> Tuple[FiniteModule, Projection]:
    dims = module.group.dims
    k = module.group.rank
    coords = module.group.coords
    relations = [[d if j == i else 0 for j in range(k)] for i, d in enumerate(dims)]
    relations += [coords[g].tolist() for g in additive_generators(module.group, sub.elements)]

    form = smith_normal_form(relations, k)
    kept = [j for j in range(k) if form.diagonal[j] > 1]
    new_dims = [form.diagonal[j] for j in kept]
    # new coordinates y = x V, reduced mod the surviving invariant factors
    change = np.array([[form.right[i][j] % d for j, d in zip(kept, new_dims)] for i in range(k)],
                      dtype=np.int64).reshape(k, len(kept))
    group = AbelianGroup(new_dims)
    image = group.index(coords @ change)

    values, representative = np.unique(image, return_index=True)
    if len(values) != group.order:
        raise ConsistencyError(f"projection onto {module.name}/{sub.label} is not surjective")

    act = image[module.act[:, representative]]
    quotient = FiniteModule(module.ring, group, act, f"{module.name}/{sub.label}", module.config)
    logger.debug(f"Quotient {quotient.name} has invariant factors {new_dims}")
    return quotient, Projection(module, quotient, sub, image, representative.astype(np.int64))


def quotient_module(module: FiniteModule, sub: Submodule) -> Tuple[FiniteModule, Projection]:
    """M/L with its canonical projection.

    Raises:
        ZeroModuleError: when L = M
    """
    if sub.parent is not module:
        raise ParentMismatchError(f"{sub.label} is not a submodule of {module.name}")
    if sub.is_whole:
        raise ZeroModuleError(f"quotient of {module.name} by itself is the zero module")
    return module.cached(("quotient", sub.elements), lambda: _quotient(module, sub))


def _as_module(sub: Submodule) -> Tuple[FiniteModule, Embedding]:
    module = sub.parent
    group = module.group
    generators = additive_generators(group, sub.elements)
    g_coords = group.coords[generators]
    s = len(generators)

    # kernel of Z^s -> M, c -> sum c_t g_t
    congruences = [(g_coords[:, j].tolist(), d) for j, d in enumerate(group.dims)]
    relations = congruence_solutions(congruences, s)
    form = smith_normal_form(relations, s)
    kept = [j for j in range(s) if form.diagonal[j] > 1]
    new_dims = [form.diagonal[j] for j in kept]

    # new generator j is row j of V^-1 read as coefficients on the old generators
    exponent = lcm(*group.dims)
    coefficients = np.array([[form.right_inverse[j][t] % exponent for t in range(s)] for j in kept],
                            dtype=np.int64).reshape(len(kept), s)
    basis = np.mod(coefficients @ g_coords, np.array(group.dims, dtype=np.int64))

    presented = AbelianGroup(new_dims)
    image = group.index(presented.coords @ basis)
    if sorted(image.tolist()) != list(sub.elements):
        raise ConsistencyError(f"presentation of {sub.label} in {module.name} does not match its elements")
    inverse = np.full(module.order, -1, dtype=np.int64)
    inverse[image] = np.arange(presented.order)

    act = inverse[module.act[:, image]]
    result = FiniteModule(module.ring, presented, act, f"{sub.label}<{module.name}", module.config)
    return result, Embedding(result, module, sub, image, inverse)


def submodule_as_module(sub: Submodule) -> Tuple[FiniteModule, Embedding]:
    """A non-zero submodule as a FiniteModule together with its embedding into the parent."""
    if sub.is_zero:
        raise ZeroModuleError(f"zero submodule of {sub.parent.name} is not a module")
    return sub.parent.cached(("as_module", sub.elements), lambda: _as_module(sub))
